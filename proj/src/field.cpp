#include "tbt/field.hpp"

#include <sstream>
#include <utility>

#include "tbt/errors.hpp"

namespace tbt {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= 65536 || !is_prime(p))
    throw Error(ErrorCode::NotPrime, "modulus " + std::to_string(p) + " is not a small prime");
}

Residue PrimeField::reduce(std::int64_t value) const noexcept {
  const auto m = static_cast<std::int64_t>(p_);
  auto r = value % m;
  if (r < 0) r += m;
  return static_cast<Residue>(r);
}

Residue PrimeField::inv(Residue x) const {
  if (x % p_ == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  // extended Euclid on (x, p)
  std::int64_t a = x, b = p_, u = 1, v = 0;
  while (b != 0) {
    const std::int64_t t = a / b;
    a -= t * b;
    std::swap(a, b);
    u -= t * v;
    std::swap(u, v);
  }
  return reduce(u);
}

// ---------------------------------------------------------------------------

FieldMatrix::FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FieldMatrix FieldMatrix::from_rows(PrimeField field,
                                   const std::vector<std::vector<std::int64_t>>& rows,
                                   std::size_t cols) {
  const std::size_t c = rows.empty() ? cols : rows.front().size();
  FieldMatrix m(field, rows.size(), c);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != c)
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(r, j, rows[r][j]);
  }
  return m;
}

FieldMatrix FieldMatrix::from_vectors(PrimeField field, const std::vector<FieldVector>& rows,
                                      std::size_t cols) {
  FieldMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.set(r, j, rows[r][j]);
  }
  return m;
}

FieldMatrix FieldMatrix::identity(PrimeField field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FieldMatrix FieldMatrix::row_vector(PrimeField field, std::span<const Residue> v) {
  FieldMatrix m(field, 1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) m.set(0, j, v[j]);
  return m;
}

FieldMatrix FieldMatrix::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::int64_t p = 0, rows = -1, cols = -1;
  if (!(in >> p >> rows >> cols) || p < 2 || rows < 0 || cols < 0)
    throw Error(ErrorCode::ParseError, "matrix literal needs header 'p rows cols'");
  FieldMatrix m(PrimeField(static_cast<std::uint32_t>(p)), static_cast<std::size_t>(rows),
                static_cast<std::size_t>(cols));
  for (std::int64_t r = 0; r < rows; ++r) {
    for (std::int64_t c = 0; c < cols; ++c) {
      std::int64_t v = 0;
      if (!(in >> v)) throw Error(ErrorCode::ParseError, "matrix literal is truncated");
      m.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), v);
    }
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::ParseError, "trailing data after matrix literal");
  return m;
}

std::string FieldMatrix::to_literal() const {
  std::ostringstream out;
  out << field_.modulus() << ' ' << rows_ << ' ' << cols_ << '\n';
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << at(r, c);
    out << '\n';
  }
  return out.str();
}

FieldVector FieldMatrix::row_copy(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

FieldVector FieldMatrix::column(std::size_t c) const {
  FieldVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

std::vector<std::vector<std::int64_t>> FieldMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = at(r, c);
  return out;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = at(r, c);
  return t;
}

FieldMatrix FieldMatrix::multiply(const FieldMatrix& rhs) const {
  if (cols_ != rhs.rows_ || !(field_ == rhs.field_))
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  FieldMatrix out(field_, rows_, rhs.cols_);
  const std::uint64_t p = field_.modulus();
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < rhs.cols_; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < cols_; ++i) acc = (acc + static_cast<std::uint64_t>(at(r, i)) * rhs.at(i, c)) % p;
      out.data_[r * rhs.cols_ + c] = static_cast<Residue>(acc);
    }
  }
  return out;
}

FieldMatrix FieldMatrix::plus(const FieldMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  FieldMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

FieldMatrix FieldMatrix::minus(const FieldMatrix& rhs) const {
  return plus(rhs.scaled(field_.neg(1)));
}

FieldMatrix FieldMatrix::scaled(Residue s) const {
  FieldMatrix out(*this);
  for (auto& x : out.data_) x = field_.mul(x, s);
  return out;
}

FieldMatrix FieldMatrix::select_rows(std::span<const std::size_t> indices) const {
  FieldMatrix out(field_, indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= rows_) throw Error(ErrorCode::DimensionMismatch, "row index out of range");
    for (std::size_t c = 0; c < cols_; ++c) out.data_[i * cols_ + c] = at(indices[i], c);
  }
  return out;
}

FieldMatrix FieldMatrix::select_cols(std::span<const std::size_t> indices) const {
  FieldMatrix out(field_, rows_, indices.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (indices[i] >= cols_) throw Error(ErrorCode::DimensionMismatch, "column index out of range");
      out.data_[r * indices.size() + i] = at(r, indices[i]);
    }
  return out;
}

FieldMatrix FieldMatrix::col_range(std::size_t first, std::size_t count) const {
  std::vector<std::size_t> idx(count);
  for (std::size_t i = 0; i < count; ++i) idx[i] = first + i;
  return select_cols(idx);
}

FieldMatrix FieldMatrix::without_row(std::size_t r) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < rows_; ++i)
    if (i != r) idx.push_back(i);
  return select_rows(idx);
}

bool FieldMatrix::is_zero() const noexcept {
  for (auto x : data_)
    if (x != 0) return false;
  return true;
}

bool FieldMatrix::is_zero_row(std::size_t r) const noexcept { return is_zero_vector(row(r)); }

// ---------------------------------------------------------------------------

FieldMatrix hconcat(std::initializer_list<const FieldMatrix*> blocks) {
  if (blocks.size() == 0) throw Error(ErrorCode::InvalidArgument, "hconcat of nothing");
  const auto& first = **blocks.begin();
  std::size_t cols = 0;
  for (const auto* b : blocks) {
    if (b->rows() != first.rows()) throw Error(ErrorCode::DimensionMismatch, "hconcat row mismatch");
    cols += b->cols();
  }
  FieldMatrix out(first.field(), first.rows(), cols);
  std::size_t offset = 0;
  for (const auto* b : blocks) {
    for (std::size_t r = 0; r < b->rows(); ++r)
      for (std::size_t c = 0; c < b->cols(); ++c) out.set(r, offset + c, b->at(r, c));
    offset += b->cols();
  }
  return out;
}

FieldMatrix vconcat(const FieldMatrix& top, const FieldMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw Error(ErrorCode::DimensionMismatch, "vconcat column mismatch");
  FieldMatrix out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out.set(r, c, top.at(r, c));
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out.set(top.rows() + r, c, bottom.at(r, c));
  return out;
}

FieldMatrix outer_product(const PrimeField& f, std::span<const Residue> column,
                          std::span<const Residue> row) {
  FieldMatrix out(f, column.size(), row.size());
  for (std::size_t r = 0; r < column.size(); ++r)
    for (std::size_t c = 0; c < row.size(); ++c) out.set(r, c, f.mul(column[r], row[c]));
  return out;
}

FieldVector vec_mat(const FieldVector& v, const FieldMatrix& m) {
  if (v.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "vector-matrix shape mismatch");
  const auto& f = m.field();
  FieldVector out(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v[r] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] = f.add(out[c], f.mul(v[r], m.at(r, c)));
  }
  return out;
}

FieldVector mat_vec(const FieldMatrix& m, const FieldVector& v) {
  if (v.size() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  FieldVector out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = dot(m.field(), m.row(r), v);
  return out;
}

Residue dot(const PrimeField& f, std::span<const Residue> x, std::span<const Residue> y) {
  Residue acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], y[i]));
  return acc;
}

bool is_zero_vector(std::span<const Residue> v) noexcept {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

std::string vector_to_string(std::span<const Residue> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

namespace {

// In-place Gauss-Jordan on the leading `limit` columns. Returns pivot columns.
std::vector<std::size_t> eliminate(FieldMatrix& m, std::size_t limit) {
  const auto& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < limit && lead < m.rows(); ++c) {
    std::size_t pr = lead;
    while (pr < m.rows() && m.at(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const auto tmp = m.at(pr, j);
        m.set(pr, j, m.at(lead, j));
        m.set(lead, j, tmp);
      }
    const Residue s = f.inv(m.at(lead, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m.set(lead, j, f.mul(m.at(lead, j), s));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead) continue;
      const Residue factor = m.at(r, c);
      if (factor == 0) continue;
      for (std::size_t j = 0; j < m.cols(); ++j)
        m.set(r, j, f.sub(m.at(r, j), f.mul(factor, m.at(lead, j))));
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

}  // namespace

Echelon rref(const FieldMatrix& m) {
  FieldMatrix work(m);
  auto pivots = eliminate(work, work.cols());
  std::vector<std::size_t> keep(pivots.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  return {work.select_rows(keep), std::move(pivots)};
}

std::size_t rank(const FieldMatrix& m) {
  FieldMatrix work(m);
  return eliminate(work, work.cols()).size();
}

FieldMatrix row_basis(const FieldMatrix& m) { return rref(m).reduced; }

FieldMatrix left_kernel(const FieldMatrix& m) {
  const auto& f = m.field();
  const FieldMatrix id = FieldMatrix::identity(f, m.rows());
  FieldMatrix work = hconcat({&m, &id});
  const auto pivots = eliminate(work, m.cols());
  std::vector<std::size_t> kernel_rows;
  for (std::size_t r = pivots.size(); r < work.rows(); ++r) kernel_rows.push_back(r);
  FieldMatrix k = work.select_rows(kernel_rows).col_range(m.cols(), m.rows());
  return row_basis(k);
}

std::optional<FieldVector> solve_any(const FieldMatrix& a, const FieldVector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  FieldMatrix bcol(a.field(), b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) bcol.set(i, 0, b[i]);
  FieldMatrix work = hconcat({&a, &bcol});
  const auto pivots = eliminate(work, work.cols());
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  FieldVector v(a.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = work.at(i, a.cols());
  return v;
}

FieldVector solve_unique(const FieldMatrix& a, const FieldVector& b) {
  auto v = solve_any(a, b);
  if (!v) throw Error(ErrorCode::NoSolution, "right-hand side outside column space");
  if (rank(a) < a.cols()) throw Error(ErrorCode::NotUnique, "coefficient matrix has a nontrivial kernel");
  return *v;
}

std::optional<FieldVector> solve_left(const FieldMatrix& m, const FieldVector& b) {
  return solve_any(m.transpose(), b);
}

bool row_space_contains(const FieldMatrix& outer, const FieldMatrix& inner) {
  if (inner.rows() == 0) return true;
  if (outer.cols() != inner.cols()) throw Error(ErrorCode::DimensionMismatch, "row space width mismatch");
  return rank(vconcat(outer, inner)) == rank(outer);
}

bool same_row_space(const FieldMatrix& a, const FieldMatrix& b) {
  return row_space_contains(a, b) && row_space_contains(b, a);
}

FieldMatrix row_space_intersection(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "intersection needs equal widths");
  // x a + y b = 0  gives  x a = -y b in both spaces.
  const FieldMatrix k = left_kernel(vconcat(a, b));
  return row_basis(k.col_range(0, a.rows()).multiply(a));
}

}  // namespace tbt
