#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tbt/build.hpp"
#include "tbt/code.hpp"
#include "tbt/dual.hpp"
#include "tbt/trellis.hpp"

namespace tbt {

/// Output of the dual construction. Rows of x_by_end are indexed by span end, rows of y by span
/// start: y.T[m] = (m, a_m] where x_by_end.T[m] = (a_m, m].
struct DualCharResult {
  CharacteristicPair x_by_end;
  std::vector<std::size_t> end_to_input;  // end_to_input[l] = row of the caller's X
  FieldMatrix H;
  std::vector<FieldMatrix> N;  // states of T_(X, H, T), row-aligned with x_by_end
  std::vector<FieldVector> v;  // c^m = v[m] H
  CharacteristicPair y;
};

/// Builds the dual characteristic pair for a characteristic pair of C and a parity check matrix
/// H of C. Every intermediate identity is checked before returning.
/// Throws SupportError, InvalidCharacteristicPair, NotOrthogonal, RankDeficient,
/// NoUniqueSolution, VerificationFailed.
DualCharResult dual_characteristic_pair(const CharacteristicPair& x, const FieldMatrix& H);

/// K picks k primal rows by span end; the dual rows are the ones whose spans are not reversals
/// of the chosen primal spans. Both lists are kept in increasing index order.
struct DualSelection {
  std::vector<std::size_t> K;
  std::vector<std::size_t> K_hat;
  FieldMatrix X_sel;
  SpanList S;
  FieldMatrix Y_sel;
  SpanList S_hat;
};

/// Throws BadSize unless |K| = k with distinct, in-range indices.
DualSelection dual_selection(const DualCharResult& res, const std::vector<std::size_t>& K);

/// Same for an arbitrary candidate dual pair y (used for negative controls). Throws BadSize if the
/// number of non-reversed dual spans is not n - k.
DualSelection make_dual_selection(const CharacteristicPair& x_by_end, const CharacteristicPair& y,
                                  const std::vector<std::size_t>& K);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> all_selections(std::size_t n, std::size_t k);

struct RankEntry {
  std::vector<std::size_t> K;
  bool x_full = false;
  bool v_independent = false;
  bool y_full = false;
  bool consistent() const noexcept { return x_full == v_independent && v_independent == y_full; }
};

struct RankEquivalenceReport {
  std::vector<RankEntry> entries;
  std::vector<std::vector<std::size_t>> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks rk X~ = k <=> {v_m : m not in K} independent <=> rk Y~ = n - k over every K.
RankEquivalenceReport verify_rank_equivalence(const DualCharResult& res);

/// Dual rank condition of an arbitrary pair: rk X~ = k <=> rk Y~ = n - k. v_independent mirrors
/// y_full since no v vectors exist.
RankEquivalenceReport check_dual_rank_condition(const CharacteristicPair& x_by_end, const CharacteristicPair& y);

struct DualKvReport {
  std::vector<std::size_t> K;
  bool ranks_match = false;       // rk N~_j = rk P_j = rk N~_j P_j^T at every j
  bool states_equal = false;      // dual states of the pairing equal im P_j
  bool transitions_equal = false; // im(P_j | Y~_j^T | P_{j+1}) equals the local dual section
  bool isomorphic = false;        // to the product trellis of (Y~, S-hat)
  bool scp_equal = false;         // primal and dual KV trellises share their SCP
  std::optional<std::size_t> failing_section;
  bool ok() const noexcept { return ranks_match && states_equal && transitions_equal && isomorphic && scp_equal; }
};

struct DualKvPair {
  BcjrTrellis primal;
  std::vector<FieldMatrix> P;
  LinearTrellis dual;  // staggered trellis of (Y~, P)
  DualKvReport report;
};

/// Primal KV trellis of the selection, the P_j pairing and the dual trellis built from it.
/// Throws RankDeficient if rk X~ < k.
DualKvPair dual_kv_pair(const DualCharResult& res, const DualSelection& sel,
                        const SearchBudget& budget = SearchBudget::from_environment());
/// As dual_kv_pair, but throws DualityFailed naming the first failing section or clause.
DualKvPair require_dual_kv_pair(const DualCharResult& res, const DualSelection& sel,
                                const SearchBudget& budget = SearchBudget::from_environment());

struct StrongDualityReport {
  bool isomorphic = false;
  bool scp_equal = false;
  bool ok() const noexcept { return isomorphic && scp_equal; }
};

/// Local dual of T_(X~, H, S) against the product trellis of (Y~, S-hat), for any selection.
/// Throws RankDeficient if rk X~ < k.
StrongDualityReport check_strong_duality(const DualSelection& sel, const FieldMatrix& H,
                                         const SearchBudget& budget = SearchBudget::from_environment());

struct SymmetryReport {
  bool displacement_equal = false;  // D' = D^T
  bool states_equal = false;        // N'_j = N_j^T for every j
  FieldMatrix D;
  FieldMatrix D_prime;
  bool ok() const noexcept { return displacement_equal && states_equal; }
};

/// Compares T_(X~, Y~, S) with T_(Y~, X~, S-hat). Throws NotOrthogonal.
SymmetryReport verify_bcjr_symmetry(const DualSelection& sel);
/// Throws SymmetryFailed when the report is not ok.
SymmetryReport require_bcjr_symmetry(const DualSelection& sel);

struct SelectionVerdict {
  std::vector<std::size_t> K;
  DualKvReport duality;
  SymmetryReport symmetry;
  bool ok() const noexcept { return duality.ok() && symmetry.ok(); }
};

struct KvConjectureReport {
  DualCharResult construction;
  bool dual_pair_valid = false;   // (Y, T-hat) is a characteristic pair of the dual code
  bool spans_reversed = false;    // T-hat is the characteristic span list of the dual code
  RankEquivalenceReport ranks;
  std::vector<SelectionVerdict> selections;  // full-rank selections only
  bool ok() const noexcept;
};

/// End-to-end run on one code. jobs > 1 spreads the selections over worker threads; the report
/// order does not depend on it.
KvConjectureReport kv_conjecture_suite(const LinearCode& code, TieBreak tie_break, std::size_t jobs = 1,
                                       const SearchBudget& budget = SearchBudget::from_environment());

}  // namespace tbt
