#include "tbt/code.hpp"

#include <algorithm>
#include <limits>

#include "tbt/errors.hpp"

namespace tbt {

namespace {

bool every_column_nonzero(const FieldMatrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool hit = false;
    for (std::size_t r = 0; r < m.rows() && !hit; ++r) hit = m.at(r, j) != 0;
    if (!hit) return false;
  }
  return true;
}

// Cyclic column order starting at `start`.
std::vector<std::size_t> rotation(std::size_t n, std::size_t start) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = (start + i) % n;
  return order;
}

bool column_nonzero(const FieldMatrix& m, std::size_t j) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m.at(r, j) != 0) return true;
  return false;
}

void require_full_support(const LinearCode& c) {
  if (!c.has_full_support())
    throw Error(ErrorCode::SupportError, "the code does not have full support");
  if (!c.dual_has_full_support())
    throw Error(ErrorCode::SupportError, "the dual code does not have full support");
}

// Closed interval [a,b] of `s` that has length d = (b - a) mod n.
Span closed_interval(std::size_t a, std::size_t d, std::size_t n) { return Span(a, (a + d) % n, n); }

}  // namespace

LinearCode::LinearCode(FieldMatrix g, FieldMatrix h) : g_(std::move(g)), h_(std::move(h)) {
  support_ = g_.rows() > 0 && every_column_nonzero(g_);
  dual_support_ = h_.rows() > 0 && every_column_nonzero(h_);
}

LinearCode LinearCode::from_generator(const FieldMatrix& rows) {
  if (rows.is_zero()) throw Error(ErrorCode::ZeroCode, "generator matrix has no nonzero row");
  return from_rows_allow_zero(rows);
}

LinearCode LinearCode::from_rows_allow_zero(const FieldMatrix& rows) {
  FieldMatrix g = row_basis(rows);
  FieldMatrix h = left_kernel(g.transpose());
  return LinearCode(std::move(g), std::move(h));
}

bool LinearCode::contains(const FieldVector& word) const {
  if (word.size() != length()) return false;
  return is_zero_vector(mat_vec(h_, word));
}

LinearCode code_from_generator(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows) {
  return LinearCode::from_generator(FieldMatrix::from_rows(PrimeField(p), rows));
}

LinearCode dual_code(const LinearCode& c) { return LinearCode::from_rows_allow_zero(c.parity_check()); }

FieldMatrix cyclic_shift_columns(const FieldMatrix& m, std::size_t steps) {
  if (m.cols() == 0) return m;
  return m.select_cols(rotation(m.cols(), steps % m.cols()));
}

LinearCode cyclic_shift(const LinearCode& c, std::size_t steps) {
  return LinearCode::from_rows_allow_zero(cyclic_shift_columns(c.generator(), steps));
}

FieldMatrix subcode_on_interval(const LinearCode& c, const Span& s) {
  const auto& g = c.generator();
  std::vector<std::size_t> outside;
  for (std::size_t j = 0; j < c.length(); ++j)
    if (!s.closed_contains(j)) outside.push_back(j);
  const FieldMatrix coeffs = left_kernel(g.select_cols(outside));
  return row_basis(coeffs.multiply(g));
}

Span shortest_span_from(const LinearCode& c, std::size_t a) {
  const std::size_t n = c.length();
  if (a >= n) throw Error(ErrorCode::InvalidArgument, "start index out of range");
  for (std::size_t d = 0; d < n; ++d) {
    const Span s = closed_interval(a, d, n);
    const FieldMatrix w = subcode_on_interval(c, s);
    if (column_nonzero(w, s.a) && column_nonzero(w, s.b)) return s;
  }
  throw Error(ErrorCode::UnsupportedPosition, "no codeword is nonzero at " + std::to_string(a));
}

Span shortest_span_to(const LinearCode& c, std::size_t b) {
  const std::size_t n = c.length();
  if (b >= n) throw Error(ErrorCode::InvalidArgument, "end index out of range");
  for (std::size_t d = 0; d < n; ++d) {
    const Span s = closed_interval((b + n - d) % n, d, n);
    const FieldMatrix w = subcode_on_interval(c, s);
    if (column_nonzero(w, s.a) && column_nonzero(w, s.b)) return s;
  }
  throw Error(ErrorCode::UnsupportedPosition, "no codeword is nonzero at " + std::to_string(b));
}

SpanList characteristic_spans(const LinearCode& c) {
  require_full_support(c);
  SpanList t;
  for (std::size_t a = 0; a < c.length(); ++a) t.push_back(shortest_span_from(c, a));
  return t;
}

SpanList characteristic_spans_by_end(const LinearCode& c) {
  require_full_support(c);
  SpanList t;
  for (std::size_t b = 0; b < c.length(); ++b) t.push_back(shortest_span_to(c, b));
  return t;
}

FieldVector characteristic_generator(const LinearCode& c, const Span& s, TieBreak policy) {
  const auto& f = c.field();
  const FieldMatrix w = subcode_on_interval(c, s);
  FieldVector out;
  if (policy == TieBreak::LexFirst) {
    // RREF in cyclic order from s.a: the first row is the lex-least word with leading 1.
    const auto order = rotation(c.length(), s.a);
    const Echelon e = rref(w.select_cols(order));
    if (e.pivots.empty() || e.pivots.front() != 0)
      throw Error(ErrorCode::UnsupportedPosition, "no codeword with span " + s.to_string());
    out.assign(c.length(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) out[order[i]] = e.reduced.at(0, i);
  } else {
    for (std::size_t r = 0; r < w.rows(); ++r) {
      if (w.at(r, s.a) == 0) continue;
      const Residue scale = f.inv(w.at(r, s.a));
      out = w.row_copy(r);
      for (auto& x : out) x = f.mul(x, scale);
      break;
    }
  }
  if (out.empty() || !is_span_of(s, out))
    throw Error(ErrorCode::VerificationFailed, "generator does not realize span " + s.to_string());
  return out;
}

CharacteristicPair characteristic_pair(const LinearCode& c, TieBreak policy) {
  SpanList t = characteristic_spans(c);
  std::vector<FieldVector> rows;
  rows.reserve(t.size());
  for (const auto& s : t) rows.push_back(characteristic_generator(c, s, policy));
  return {FieldMatrix::from_vectors(c.field(), rows, c.length()), std::move(t)};
}

CharacteristicCheck check_characteristic_pair(const LinearCode& c, const CharacteristicPair& x) {
  CharacteristicCheck out;
  const std::size_t n = c.length();
  if (x.X.rows() != n || x.X.cols() != n || x.T.size() != n) return out;
  out.generates_code = same_row_space(x.X, c.generator());
  out.spans_valid = true;
  for (std::size_t l = 0; l < n; ++l)
    out.spans_valid = out.spans_valid && x.T[l].n == n && is_span_of(x.T[l], x.X.row(l));
  std::vector<bool> start(n, false), end(n, false);
  out.distinct_endpoints = true;
  for (const auto& s : x.T) {
    if (s.n != n || start[s.a] || end[s.b]) {
      out.distinct_endpoints = false;
      continue;
    }
    start[s.a] = end[s.b] = true;
  }
  out.coverage = true;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t hits = 0;
    for (const auto& s : x.T) hits += s.n == n && s.contains(j);
    out.coverage = out.coverage && hits == n - c.dimension();
  }
  return out;
}

EndSorted sorted_by_end(const CharacteristicPair& x) {
  const std::size_t n = x.T.size();
  std::vector<std::size_t> perm(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t b = x.T[r].b;
    if (b >= n || perm[b] != n)
      throw Error(ErrorCode::InvalidCharacteristicPair, "span end points are not distinct");
    perm[b] = r;
  }
  SpanList t(n);
  for (std::size_t l = 0; l < n; ++l) t[l] = x.T[perm[l]];
  return {{x.X.select_rows(perm), std::move(t)}, std::move(perm)};
}

std::uint64_t saturating_power(std::uint64_t q, std::size_t e) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    out *= q;
  }
  return out;
}

std::vector<FieldVector> enumerate_codewords(const LinearCode& c, std::uint64_t budget) {
  if (saturating_power(c.field().modulus(), c.dimension()) > budget)
    throw Error(ErrorCode::TooLarge, "code has too many codewords to enumerate");
  std::vector<FieldVector> out;
  for_each_combination(c.generator(), [&](const FieldVector& v, const FieldVector&) { out.push_back(v); });
  return out;
}

std::vector<FieldVector> codewords_with_span(const LinearCode& c, const Span& s, bool normalized) {
  const FieldMatrix w = subcode_on_interval(c, s);
  std::vector<FieldVector> out;
  for_each_combination(w, [&](const FieldVector& v, const FieldVector&) {
    if (v[s.a] == 0 || v[s.b] == 0) return;
    if (normalized && v[s.a] != 1) return;
    out.push_back(v);
  });
  return out;
}

std::uint64_t count_characteristic_matrices(const LinearCode& c, bool normalized, std::uint64_t budget) {
  if (saturating_power(c.field().modulus(), c.dimension()) > budget)
    throw Error(ErrorCode::TooLarge, "code has too many codewords to enumerate");
  std::uint64_t total = 1;
  for (const auto& s : characteristic_spans(c)) total *= codewords_with_span(c, s, normalized).size();
  return total;
}

LinearCode random_code(const PrimeField& field, std::size_t n, std::size_t k, std::mt19937_64& rng) {
  if (k == 0 || k >= n) throw Error(ErrorCode::InvalidArgument, "random codes need 0 < k < n");
  std::uniform_int_distribution<std::uint32_t> digit(0, field.modulus() - 1);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    FieldMatrix g(field, k, n);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t j = 0; j < n; ++j) g.set(r, j, digit(rng));
    if (rank(g) != k) continue;
    LinearCode c = LinearCode::from_generator(g);
    if (c.has_full_support() && c.dual_has_full_support()) return c;
  }
  throw Error(ErrorCode::InvalidArgument, "could not draw a code with full support");
}

}  // namespace tbt
