#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tbt {

using Residue = std::uint32_t;
using FieldVector = std::vector<Residue>;

/// The prime field GF(p). Only the modulus is stored; elements are residues in [0, p).
class PrimeField {
 public:
  /// Throws Error(NotPrime) unless p is a prime below 2^16.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Residue reduce(std::int64_t value) const noexcept;
  Residue add(Residue x, Residue y) const noexcept { return (x + y) % p_; }
  Residue sub(Residue x, Residue y) const noexcept { return (x + p_ - y) % p_; }
  Residue mul(Residue x, Residue y) const noexcept {
    return static_cast<Residue>((static_cast<std::uint64_t>(x) * y) % p_);
  }
  Residue neg(Residue x) const noexcept { return (p_ - x) % p_; }
  Residue inv(Residue x) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t p);

/// Dense row-major matrix over GF(p). Dimensions may be zero.
class FieldMatrix {
 public:
  FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols);

  /// Builds from integer rows, reducing every entry mod p. Ragged input throws DimensionMismatch.
  /// `cols` is only consulted when `rows` is empty.
  static FieldMatrix from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows,
                               std::size_t cols = 0);
  static FieldMatrix from_vectors(PrimeField field, const std::vector<FieldVector>& rows,
                                  std::size_t cols);
  static FieldMatrix identity(PrimeField field, std::size_t n);
  static FieldMatrix row_vector(PrimeField field, std::span<const Residue> v);

  /// Literal text form: a header line "p rows cols" followed by `rows` lines of residues.
  static FieldMatrix parse(std::string_view text);
  std::string to_literal() const;

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t value) {
    data_[r * cols_ + c] = field_.reduce(value);
  }

  std::span<const Residue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  FieldVector row_copy(std::size_t r) const;
  FieldVector column(std::size_t c) const;
  std::vector<std::vector<std::int64_t>> to_rows() const;

  FieldMatrix transpose() const;
  FieldMatrix multiply(const FieldMatrix& rhs) const;
  FieldMatrix plus(const FieldMatrix& rhs) const;
  FieldMatrix minus(const FieldMatrix& rhs) const;
  FieldMatrix scaled(Residue s) const;

  FieldMatrix select_rows(std::span<const std::size_t> indices) const;
  FieldMatrix select_cols(std::span<const std::size_t> indices) const;
  FieldMatrix col_range(std::size_t first, std::size_t count) const;
  FieldMatrix without_row(std::size_t r) const;

  bool is_zero() const noexcept;
  bool is_zero_row(std::size_t r) const noexcept;

  bool operator==(const FieldMatrix& other) const = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

FieldMatrix hconcat(std::initializer_list<const FieldMatrix*> blocks);
FieldMatrix vconcat(const FieldMatrix& top, const FieldMatrix& bottom);
FieldMatrix outer_product(const PrimeField& f, std::span<const Residue> column,
                          std::span<const Residue> row);

// Vector helpers; all vectors are assumed to have matching lengths.
FieldVector vec_mat(const FieldVector& v, const FieldMatrix& m);   // v * M
FieldVector mat_vec(const FieldMatrix& m, const FieldVector& v);   // M * v^T
Residue dot(const PrimeField& f, std::span<const Residue> x, std::span<const Residue> y);
bool is_zero_vector(std::span<const Residue> v) noexcept;
std::string vector_to_string(std::span<const Residue> v);

/// Reduced row echelon form, keeping only nonzero rows. Pivot entries are 1.
struct Echelon {
  FieldMatrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(const FieldMatrix& m);
std::size_t rank(const FieldMatrix& m);

/// Canonical basis of the row space: the nonzero rows of the RREF.
FieldMatrix row_basis(const FieldMatrix& m);

/// Full-row-rank basis K (in RREF) of { a : a * M = 0 }.
FieldMatrix left_kernel(const FieldMatrix& m);

/// The unique v with A * v^T = b. Throws NoSolution / NotUnique.
FieldVector solve_unique(const FieldMatrix& a, const FieldVector& b);

/// Some v with A * v^T = b (free variables set to zero), or nullopt.
std::optional<FieldVector> solve_any(const FieldMatrix& a, const FieldVector& b);

/// Some x with x * M = b, or nullopt.
std::optional<FieldVector> solve_left(const FieldMatrix& m, const FieldVector& b);

/// im(inner) is a subspace of im(outer).
bool row_space_contains(const FieldMatrix& outer, const FieldMatrix& inner);
bool same_row_space(const FieldMatrix& a, const FieldMatrix& b);
/// RREF basis of im(a) intersected with im(b).
FieldMatrix row_space_intersection(const FieldMatrix& a, const FieldMatrix& b);

/// Calls fn(vector) for every element of the row space of `basis` (assumed independent),
/// in lexicographic order of coefficient vectors.
template <typename Fn>
void for_each_combination(const FieldMatrix& basis, Fn&& fn) {
  const auto& f = basis.field();
  const std::size_t d = basis.rows();
  const std::uint32_t q = f.modulus();
  FieldVector coeff(d, 0);
  FieldVector value(basis.cols(), 0);
  while (true) {
    fn(static_cast<const FieldVector&>(value), static_cast<const FieldVector&>(coeff));
    // odometer increment on the last coordinate first, keeping `value` in sync
    std::size_t pos = d;
    while (pos > 0) {
      --pos;
      coeff[pos] = (coeff[pos] + 1) % q;
      for (std::size_t c = 0; c < value.size(); ++c) value[c] = f.add(value[c], basis.at(pos, c));
      if (coeff[pos] != 0) break;
      if (pos == 0) return;
    }
    if (d == 0) return;
  }
}

/// Like for_each_combination, starting from `offset` instead of zero; stops once fn returns true.
/// Returns whether fn stopped the walk.
template <typename Fn>
bool find_in_coset(const FieldMatrix& basis, const FieldVector& offset, Fn&& fn) {
  const auto& f = basis.field();
  const std::size_t d = basis.rows();
  const std::uint32_t q = f.modulus();
  FieldVector coeff(d, 0);
  FieldVector value = offset;
  while (true) {
    if (fn(static_cast<const FieldVector&>(value))) return true;
    if (d == 0) return false;
    std::size_t pos = d;
    while (pos > 0) {
      --pos;
      coeff[pos] = (coeff[pos] + 1) % q;
      for (std::size_t c = 0; c < value.size(); ++c) value[c] = f.add(value[c], basis.at(pos, c));
      if (coeff[pos] != 0) break;
      if (pos == 0) return false;
    }
  }
}

}  // namespace tbt
