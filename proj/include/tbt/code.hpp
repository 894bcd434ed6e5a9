#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "tbt/field.hpp"
#include "tbt/span.hpp"

namespace tbt {

constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 20;

/// Linear code C = im G = ker H^T of length n. G and H are kept in RREF.
class LinearCode {
 public:
  /// Canonicalizes `rows`. Throws ZeroCode if every row is zero.
  static LinearCode from_generator(const FieldMatrix& rows);
  /// Same as from_generator but admits the zero code.
  static LinearCode from_rows_allow_zero(const FieldMatrix& rows);

  const PrimeField& field() const noexcept { return g_.field(); }
  std::size_t length() const noexcept { return g_.cols(); }
  std::size_t dimension() const noexcept { return g_.rows(); }
  const FieldMatrix& generator() const noexcept { return g_; }
  const FieldMatrix& parity_check() const noexcept { return h_; }

  /// No coordinate vanishes on every codeword.
  bool has_full_support() const noexcept { return support_; }
  bool dual_has_full_support() const noexcept { return dual_support_; }

  bool contains(const FieldVector& word) const;

  bool operator==(const LinearCode& other) const { return g_ == other.g_; }

 private:
  LinearCode(FieldMatrix g, FieldMatrix h);

  FieldMatrix g_;
  FieldMatrix h_;
  bool support_ = false;
  bool dual_support_ = false;
};

LinearCode code_from_generator(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);
LinearCode dual_code(const LinearCode& c);

/// Rotates every codeword left by `steps`: new coordinate j is old coordinate j+steps.
LinearCode cyclic_shift(const LinearCode& c, std::size_t steps);
FieldMatrix cyclic_shift_columns(const FieldMatrix& m, std::size_t steps);

/// Basis (RREF) of the codewords whose support lies in the closed interval [s.a, s.b].
FieldMatrix subcode_on_interval(const LinearCode& c, const Span& s);

/// Shortest span (a, b] of a codeword that starts at a. Throws UnsupportedPosition.
Span shortest_span_from(const LinearCode& c, std::size_t a);
/// Shortest span (a, b] of a codeword that ends at b. Throws UnsupportedPosition.
Span shortest_span_to(const LinearCode& c, std::size_t b);

SpanList characteristic_spans(const LinearCode& c);
SpanList characteristic_spans_by_end(const LinearCode& c);

enum class TieBreak { LexFirst, Normalized };

struct CharacteristicPair {
  FieldMatrix X;
  SpanList T;
};

/// Row a has span (a, b_a]. Throws SupportError unless C and its dual have full support.
CharacteristicPair characteristic_pair(const LinearCode& c, TieBreak policy);

/// The codeword chosen for span s under `policy`, with coordinate 1 at s.a.
FieldVector characteristic_generator(const LinearCode& c, const Span& s, TieBreak policy);

struct CharacteristicCheck {
  bool generates_code = false;   // im X = C
  bool spans_valid = false;      // T[l] is a span of row l
  bool distinct_endpoints = false;
  bool coverage = false;         // each j lies in exactly n-k spans
  bool ok() const noexcept { return generates_code && spans_valid && distinct_endpoints && coverage; }
};

CharacteristicCheck check_characteristic_pair(const LinearCode& c, const CharacteristicPair& x);

/// Reorders rows so that row l has span ending at l. perm[l] is the source row.
struct EndSorted {
  CharacteristicPair pair;
  std::vector<std::size_t> perm;
};
EndSorted sorted_by_end(const CharacteristicPair& x);

/// Every codeword, in the coefficient order of the canonical generator. Throws TooLarge.
std::vector<FieldVector> enumerate_codewords(const LinearCode& c,
                                             std::uint64_t budget = kDefaultEnumerationBudget);

/// Codewords whose span set contains s (c_a, c_b nonzero, support in [a,b]).
std::vector<FieldVector> codewords_with_span(const LinearCode& c, const Span& s, bool normalized);

/// Number of characteristic matrices with the code's characteristic span list.
/// Throws TooLarge if q^k exceeds `budget`.
std::uint64_t count_characteristic_matrices(const LinearCode& c, bool normalized,
                                            std::uint64_t budget = kDefaultEnumerationBudget);

/// q^e, saturating at UINT64_MAX.
std::uint64_t saturating_power(std::uint64_t q, std::size_t e);

/// Random [n,k] code over `field` for which C and its dual both have full support.
LinearCode random_code(const PrimeField& field, std::size_t n, std::size_t k, std::mt19937_64& rng);

}  // namespace tbt
