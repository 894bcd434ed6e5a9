#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tbt/code.hpp"
#include "tbt/field.hpp"
#include "tbt/span.hpp"
#include "tbt/trellis.hpp"

namespace tbt {

/// Trellis with V_i = im S_i and E_i = im (S_i | column i of `labels` | S_{i+1}).
/// The state matrices are row-aligned with `labels`.
LinearTrellis staggered_trellis(const FieldMatrix& labels, const std::vector<FieldMatrix>& states);

/// Trellis of one vector with one of its spans: V_j = F on the span, {0} elsewhere.
/// Throws InvalidSpan unless s is a span of c.
LinearTrellis elementary_trellis(const PrimeField& f, const FieldVector& c, const Span& s);

struct ProductTrellis {
  LinearTrellis base;
  FieldMatrix G;
  SpanList spans;
  std::vector<FieldMatrix> M;  // M_j diagonal, entry l is 1 iff j in spans[l]
};

/// Section-wise product of the elementary trellises of the rows of G. Throws ZeroRow, InvalidSpan.
ProductTrellis product_trellis(const FieldMatrix& G, const SpanList& spans);

/// row l = sum over j = a_l .. n-1 of g_lj * (column j of H). Throws NotOrthogonal, InvalidSpan.
FieldMatrix bcjr_displacement(const FieldMatrix& G, const FieldMatrix& H, const SpanList& spans);

struct BcjrTrellis {
  LinearTrellis base;
  FieldMatrix G;
  FieldMatrix H;
  FieldMatrix D;
  std::vector<FieldMatrix> N;  // N_0 = D, N_i = N_{i-1} + G_{i-1}^T H_{i-1}; row-aligned with G
  std::optional<SpanList> spans;
};

/// Throws NotOrthogonal unless G H^T = 0.
BcjrTrellis bcjr_trellis(const FieldMatrix& G, const FieldMatrix& H, const FieldMatrix& D);
BcjrTrellis bcjr_trellis_from_spans(const FieldMatrix& G, const FieldMatrix& H, const SpanList& spans);

/// BCJR trellis on the selected characteristic rows. Confirms that row l of every N_j vanishes
/// off its span, that the nonzero rows of each N_j are independent, and that the SCP equals the
/// product trellis SCP. Throws BadSelectionSize, RankDeficient, VerificationFailed.
BcjrTrellis kv_trellis(const CharacteristicPair& x, const FieldMatrix& H, const std::vector<std::size_t>& selection);

/// BCJR trellis of the left-shifted data with N*_i = N_{i+steps}.
BcjrTrellis shift_trellis(const BcjrTrellis& t, std::size_t steps);

/// Text rows "s_0|g_0|s_1|...|s_{n-1}|g_{n-1}|s_0", one line per generator. Block entries are
/// written without separators for p <= 10 and comma-separated otherwise.
std::string staggered_display(const std::vector<FieldMatrix>& states, const FieldMatrix& G);

}  // namespace tbt
