#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "tbt/errors.hpp"
#include "tbt/span.hpp"

using namespace tbt;

TEST_CASE("circular membership") {
  const Span s(3, 1, 5);  // {4, 0, 1}
  CHECK(s.contains(4));
  CHECK(s.contains(0));
  CHECK(s.contains(1));
  CHECK_FALSE(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.closed_contains(3));
  CHECK(s.length() == 3);
  CHECK_FALSE(s.is_conventional());
  CHECK(s.to_string() == "(3,1]/5");

  const Span e(2, 2, 5);
  CHECK(e.empty());
  for (std::size_t j = 0; j < 5; ++j) CHECK_FALSE(e.contains(j));
  CHECK(e.closed_contains(2));
  CHECK_FALSE(e.closed_contains(3));
}

TEST_CASE("complement, reversal and shift") {
  const Span s(1, 3, 5);
  CHECK(s.complement() == Span(3, 1, 5));
  CHECK(s.reversed() == Span(3, 1, 5));
  for (std::size_t j = 0; j < 5; ++j) CHECK(s.contains(j) != s.complement().contains(j));
  CHECK(s.shifted_left(2) == Span(4, 1, 5));
  CHECK(s.shifted_left(5) == s);
  try {
    Span(2, 2, 5).complement();
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptySpan);
  }
  CHECK_THROWS_AS(Span(5, 1, 5), Error);
}

TEST_CASE("spans of a vector agree with brute force") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    oracle::Word w(n);
    FieldVector v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<Residue>(w[j] = static_cast<std::int64_t>(rng() % 3));
    if (is_zero_vector(v)) {
      CHECK_THROWS_AS(spans_of_vector(v), Error);
      continue;
    }
    auto expect = oracle::spans(w);
    std::sort(expect.begin(), expect.end());
    std::vector<std::pair<std::size_t, std::size_t>> got;
    for (const auto& s : spans_of_vector(v)) {
      got.emplace_back(s.a, s.b);
      CHECK(is_span_of(s, v));
    }
    CHECK(got == expect);
  }
}

TEST_CASE("weight one vector has the single span (a,a]") {
  const auto s = spans_of_vector(FieldVector{0, 0, 2, 0});
  REQUIRE(s.size() == 1);
  CHECK(s[0] == Span(2, 2, 4));
  CHECK(to_string(SpanList{Span(1, 3, 5), Span(3, 0, 5)}) == "[(1,3], (3,0]]");
}
