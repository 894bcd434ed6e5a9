#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tbt/field.hpp"

namespace tbt {

/// Half-open circular interval (a,b] on Z_n. (a,a] is the empty interval.
struct Span {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t n = 1;

  Span() = default;
  /// Throws InvalidSpan unless a, b < n.
  Span(std::size_t a, std::size_t b, std::size_t n);

  bool empty() const noexcept { return a == b; }
  std::size_t length() const noexcept { return (b + n - a) % n; }

  /// j in (a,b]
  bool contains(std::size_t j) const noexcept;
  /// j in [a,b]; for (a,a] this is {a}
  bool closed_contains(std::size_t j) const noexcept;

  /// (b,a]. Throws EmptySpan when a == b.
  Span complement() const;
  /// (b,a], defined for the empty span as well.
  Span reversed() const noexcept { return {b, a, n, Unchecked{}}; }
  /// Image under the left cyclic shift by s: (a-s, b-s].
  Span shifted_left(std::size_t s) const noexcept;

  /// a <= b
  bool is_conventional() const noexcept { return a <= b; }

  std::string to_string() const;

  auto operator<=>(const Span&) const = default;

 private:
  struct Unchecked {};
  Span(std::size_t a_, std::size_t b_, std::size_t n_, Unchecked) noexcept : a(a_), b(b_), n(n_) {}
};

using SpanList = std::vector<Span>;

/// Every span of a nonzero vector, sorted by (a,b). Throws ZeroVector.
std::vector<Span> spans_of_vector(std::span<const Residue> c);

/// s is a span of c: c_a != 0 != c_b and supp(c) lies in [a,b].
bool is_span_of(const Span& s, std::span<const Residue> c);

std::string to_string(const SpanList& spans);

}  // namespace tbt
