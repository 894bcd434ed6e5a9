#include <algorithm>
#include <limits>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "tbt/errors.hpp"

using namespace tbt;
using testing::code;
using testing::M;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> pairs(const SpanList& s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& x : s) out.emplace_back(x.a, x.b);
  return out;
}

}  // namespace

TEST_CASE("generator and parity check are canonical and orthogonal") {
  const LinearCode c = code(2, {{0, 1, 1, 1, 0}, {1, 0, 0, 1, 0}, {0, 1, 1, 0, 1}});
  CHECK(c.dimension() == 3);
  CHECK(c.parity_check().rows() == 2);
  CHECK(c.generator().multiply(c.parity_check().transpose()).is_zero());
  CHECK(c.contains(FieldVector{1, 0, 0, 0, 1}));
  CHECK(dual_code(dual_code(c)) == c);
  CHECK_THROWS_AS(code(2, {{0, 0, 0}}), Error);
}

TEST_CASE("characteristic spans agree with exhaustive search") {
  for (const auto& c : testing::sample_codes(5, 30)) {
    const auto p = static_cast<std::int64_t>(c.field().modulus());
    const auto rows = oracle::to_rows(c.generator());
    CHECK(pairs(characteristic_spans(c)) == oracle::characteristic_spans(p, rows));
    SpanList by_end = characteristic_spans_by_end(c);
    SpanList by_start = characteristic_spans(c);
    std::sort(by_end.begin(), by_end.end());
    CHECK(by_end == by_start);
  }
}

TEST_CASE("characteristic pairs are valid under both policies") {
  for (const auto& c : testing::sample_codes(9, 20)) {
    for (TieBreak tb : {TieBreak::LexFirst, TieBreak::Normalized}) {
      const CharacteristicPair x = characteristic_pair(c, tb);
      const CharacteristicCheck chk = check_characteristic_pair(c, x);
      CHECK(chk.ok());
      for (std::size_t a = 0; a < c.length(); ++a) {
        CHECK(x.T[a].a == a);
        CHECK(x.X.at(a, a) == 1);
      }
      const EndSorted es = sorted_by_end(x);
      for (std::size_t l = 0; l < c.length(); ++l) CHECK(es.pair.T[l].b == l);
    }
  }
}

TEST_CASE("characteristic matrix counts") {
  // Values from brute-force enumeration of codewords per span.
  CHECK(count_characteristic_matrices(code(3, {{1, 2, 0, 0}, {0, 0, 1, 1}}), true) == 9);
  CHECK(count_characteristic_matrices(code(2, {{1, 1, 1, 1}, {0, 1, 1, 0}}), true) == 4);
  CHECK(count_characteristic_matrices(code(2, {{1, 1}}), true) == 1);
  for (const auto& c : testing::sample_codes(13, 20)) {
    const auto p = static_cast<std::int64_t>(c.field().modulus());
    const auto rows = oracle::to_rows(c.generator());
    CHECK(count_characteristic_matrices(c, true) == oracle::count_characteristic_matrices(p, rows, true));
    CHECK(count_characteristic_matrices(c, false) == oracle::count_characteristic_matrices(p, rows, false));
  }
}

TEST_CASE("cyclic codes have one normalized characteristic matrix") {
  // Cyclic [7,4] Hamming code (generator 1 + x + x^3) and the [5,1] repetition code over GF(3).
  CHECK(count_characteristic_matrices(code(2, {{1, 1, 0, 1, 0, 0, 0}, {0, 1, 1, 0, 1, 0, 0},
                                               {0, 0, 1, 1, 0, 1, 0}, {0, 0, 0, 1, 1, 0, 1}}),
                                      true) == 1);
  CHECK(count_characteristic_matrices(code(3, {{1, 1, 1, 1, 1}}), true) == 1);
  CHECK(count_characteristic_matrices(code(2, {{1, 1, 0}, {0, 1, 1}}), true) == 1);
}

TEST_CASE("support preconditions") {
  const LinearCode c = code(2, {{1, 1, 0}, {0, 0, 1}});  // dual is spanned by 110: column 2 is dead
  CHECK(c.has_full_support());
  CHECK_FALSE(c.dual_has_full_support());
  try {
    characteristic_pair(c, TieBreak::LexFirst);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SupportError);
  }
}

TEST_CASE("enumeration budget") {
  const LinearCode c = code(2, {{1, 0, 1}, {0, 1, 1}});
  CHECK(enumerate_codewords(c).size() == 4);
  CHECK_THROWS_AS(enumerate_codewords(c, 3), Error);
  CHECK(saturating_power(2, 70) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("shortest span from a start") {
  const LinearCode c = code(2, {{0, 1, 1, 1, 0}, {1, 0, 0, 1, 0}, {0, 1, 1, 0, 1}});
  CHECK(shortest_span_from(c, 1) == Span(1, 3, 5));
  CHECK(shortest_span_from(c, 4) == Span(4, 0, 5));
  CHECK(shortest_span_to(c, 0) == Span(4, 0, 5));
  CHECK(subcode_on_interval(c, Span(1, 3, 5)).rows() == 1);
  CHECK(subcode_on_interval(c, Span(1, 2, 5)).rows() == 0);
  const FieldVector g = characteristic_generator(c, Span(2, 1, 5), TieBreak::Normalized);
  CHECK(is_span_of(Span(2, 1, 5), g));
  CHECK(g[2] == 1);
}

TEST_CASE("cyclic shift of a code") {
  const LinearCode c = code(2, {{1, 1, 0, 0}, {0, 1, 1, 1}});
  const LinearCode s = cyclic_shift(c, 1);
  CHECK(s.contains(FieldVector{1, 0, 0, 1}));
  CHECK(cyclic_shift(c, 4) == c);
}

TEST_CASE("random codes meet their contract") {
  std::mt19937_64 rng(1);
  const LinearCode c = random_code(PrimeField(3), 6, 3, rng);
  CHECK(c.dimension() == 3);
  CHECK(c.has_full_support());
  CHECK(c.dual_has_full_support());
  CHECK_THROWS_AS(random_code(PrimeField(2), 4, 0, rng), Error);
}
