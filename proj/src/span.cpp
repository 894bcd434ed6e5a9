#include "tbt/span.hpp"

#include "tbt/errors.hpp"

namespace tbt {

Span::Span(std::size_t a_, std::size_t b_, std::size_t n_) : a(a_), b(b_), n(n_) {
  if (n == 0 || a >= n || b >= n)
    throw Error(ErrorCode::InvalidSpan, "span endpoints must lie in [0, n)");
}

bool Span::contains(std::size_t j) const noexcept {
  const std::size_t d = (j + n - a) % n;
  return d > 0 && d <= length();
}

bool Span::closed_contains(std::size_t j) const noexcept {
  return (j + n - a) % n <= length();
}

Span Span::complement() const {
  if (empty()) throw Error(ErrorCode::EmptySpan, "complement of the empty span " + to_string());
  return reversed();
}

Span Span::shifted_left(std::size_t s) const noexcept {
  s %= n;
  return {(a + n - s) % n, (b + n - s) % n, n, Unchecked{}};
}

std::string Span::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "]/" + std::to_string(n);
}

bool is_span_of(const Span& s, std::span<const Residue> c) {
  if (s.n != c.size()) return false;
  if (c[s.a] == 0 || c[s.b] == 0) return false;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0 && !s.closed_contains(j)) return false;
  return true;
}

std::vector<Span> spans_of_vector(std::span<const Residue> c) {
  if (is_zero_vector(c)) throw Error(ErrorCode::ZeroVector, "a zero vector has no span");
  const std::size_t n = c.size();
  std::vector<Span> out;
  for (std::size_t a = 0; a < n; ++a) {
    if (c[a] == 0) continue;
    for (std::size_t b = 0; b < n; ++b) {
      Span s(a, b, n);
      if (is_span_of(s, c)) out.push_back(s);
    }
  }
  return out;
}

std::string to_string(const SpanList& spans) {
  std::string s = "[";
  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (i) s += ", ";
    s += "(" + std::to_string(spans[i].a) + "," + std::to_string(spans[i].b) + "]";
  }
  return s + "]";
}

}  // namespace tbt
