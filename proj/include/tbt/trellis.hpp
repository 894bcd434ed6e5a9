#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tbt/code.hpp"
#include "tbt/field.hpp"

namespace tbt {

/// One time step i -> i+1. Transition rows are laid out as [state at i | label | state at i+1].
struct TrellisSection {
  std::size_t ambient_in = 0;
  std::size_t ambient_out = 0;
  FieldMatrix state_basis;  // rows span V_i inside F^ambient_in
  FieldMatrix transitions;  // rows span E_i

  FieldMatrix edge_in() const { return transitions.col_range(0, ambient_in); }
  FieldVector edge_label() const { return transitions.column(ambient_in); }
  FieldMatrix edge_out() const { return transitions.col_range(ambient_in + 1, ambient_out); }

  bool operator==(const TrellisSection&) const = default;
};

/// Sectional linear tail-biting trellis of depth n. Section i joins time i to time i+1 mod n.
class LinearTrellis {
 public:
  /// Validates shapes and that every edge starts in V_i and ends in V_{i+1}.
  /// State bases are stored in RREF; transitions are kept as given. Throws InvalidTrellis.
  LinearTrellis(PrimeField field, std::vector<TrellisSection> sections);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t depth() const noexcept { return sections_.size(); }
  const TrellisSection& section(std::size_t i) const { return sections_.at(i); }
  const std::vector<TrellisSection>& sections() const noexcept { return sections_; }
  const FieldMatrix& state_basis(std::size_t i) const { return sections_.at(i).state_basis; }
  const FieldMatrix& transitions(std::size_t i) const { return sections_.at(i).transitions; }
  std::size_t ambient(std::size_t i) const { return sections_.at(i).ambient_in; }

  bool operator==(const LinearTrellis&) const = default;

 private:
  PrimeField field_;
  std::vector<TrellisSection> sections_;
};

struct ComplexityProfile {
  std::vector<std::size_t> scp;
  std::vector<std::size_t> ecp;
  bool operator==(const ComplexityProfile&) const = default;
};

ComplexityProfile complexity(const LinearTrellis& t);

/// Column offsets of the cycle coordinates (v_0, ..., v_{n-1}, c_0, ..., c_{n-1}).
struct CycleLayout {
  std::vector<std::size_t> state_offset;
  std::size_t label_offset = 0;
  std::size_t width = 0;
};
CycleLayout cycle_layout(const LinearTrellis& t);

/// RREF basis of the label code S(T) in cycle coordinates.
FieldMatrix label_code(const LinearTrellis& t);

/// Projection of S(T) onto the label coordinates.
LinearCode edge_label_code(const LinearTrellis& t);

bool is_biproper(const LinearTrellis& t);
bool is_one_to_one(const LinearTrellis& t);
bool is_reduced(const LinearTrellis& t);

/// Keeps only states and edges that lie on a cycle. Ambient dimensions are unchanged.
LinearTrellis reduce(const LinearTrellis& t);

struct SearchBudget {
  std::uint64_t max_candidates = std::uint64_t{1} << 20;
  std::uint64_t max_enumeration = std::uint64_t{1} << 16;

  /// Reads TRELLIS_BUDGET (a positive integer) into both limits when set.
  static SearchBudget from_environment();
};

/// maps[i] is an s_i x s_i invertible matrix A_i: the state a*B_i goes to a*A_i*B'_i,
/// where B_i, B'_i are the RREF state bases of the two trellises.
struct TrellisIsomorphism {
  std::vector<FieldMatrix> maps;
};

/// Searches for per-time linear bijections carrying E_i onto E'_i with labels fixed.
/// Candidates are the solutions of the edge-compatibility system in a fixed order; the first
/// with every map invertible is returned. Throws SearchBudgetExceeded when the budget runs out
/// before the solution set is exhausted.
std::optional<TrellisIsomorphism> find_isomorphism(const LinearTrellis& t1, const LinearTrellis& t2,
                                                   const SearchBudget& budget = SearchBudget::from_environment());

/// Independent check of a witness.
bool check_isomorphism(const LinearTrellis& t1, const LinearTrellis& t2, const TrellisIsomorphism& iso);

/// Graphviz digraph with one vertex per state and one edge per transition.
/// Throws TooLarge when the explicit graph exceeds `max_elements` vertices plus edges.
std::string export_dot(const LinearTrellis& t, std::uint64_t max_elements = std::uint64_t{1} << 16);

}  // namespace tbt
