#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "tbt/build.hpp"
#include "tbt/errors.hpp"

using namespace tbt;
using testing::M;

namespace {

const FieldMatrix kG = M(2, {{0, 1, 1, 1, 0}, {1, 0, 0, 1, 0}, {0, 1, 1, 0, 1}});
const FieldMatrix kH = M(2, {{1, 0, 1, 1, 1}, {0, 1, 1, 0, 0}});
const SpanList kSpans{Span(1, 3, 5), Span(3, 0, 5), Span(2, 1, 5)};

std::vector<std::pair<std::size_t, std::size_t>> pairs(const SpanList& s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& x : s) out.emplace_back(x.a, x.b);
  return out;
}

SpanList random_spans(const FieldMatrix& g, std::mt19937_64& rng) {
  SpanList spans;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    const auto all = spans_of_vector(g.row(r));
    spans.push_back(all[rng() % all.size()]);
  }
  return spans;
}

}  // namespace

TEST_CASE("state matrices of the worked BCJR example") {
  const BcjrTrellis t = bcjr_trellis_from_spans(kG, kH, kSpans);
  CHECK(t.D == M(2, {{0, 0}, {1, 0}, {0, 1}}));
  CHECK(t.N[1] == M(2, {{0, 0}, {0, 0}, {0, 1}}));
  CHECK(t.N[2] == M(2, {{0, 1}, {0, 0}, {0, 0}}));
  CHECK(t.N[3] == M(2, {{1, 0}, {0, 0}, {1, 1}}));
  CHECK(t.N[4] == M(2, {{0, 0}, {1, 0}, {1, 1}}));
  CHECK(staggered_display(t.N, t.G) ==
        "00|0|00|1|01|1|10|1|00|0|00\n10|1|00|0|00|0|00|1|10|0|10\n01|0|01|1|00|1|11|0|11|1|01\n");
  CHECK(edge_label_code(t.base) == LinearCode::from_generator(kG));
}

TEST_CASE("BCJR construction rejects non-orthogonal input") {
  try {
    bcjr_trellis(kG, M(2, {{1, 0, 0, 0, 0}}), FieldMatrix(kG.field(), 3, 1));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOrthogonal);
  }
  CHECK_THROWS_AS(bcjr_displacement(kG, kH, {Span(0, 3, 5), Span(3, 0, 5), Span(2, 1, 5)}), Error);
}

TEST_CASE("a zero displacement leaves the first state space trivial") {
  const BcjrTrellis t = bcjr_trellis(kG, kH, FieldMatrix(kG.field(), 3, 2));
  CHECK(complexity(t.base).scp[0] == 0);
  CHECK(edge_label_code(t.base) == LinearCode::from_generator(kG));
}

TEST_CASE("any displacement yields a trellis for the code") {
  std::mt19937_64 rng(41);
  for (const auto& c : testing::sample_codes(43, 20)) {
    const FieldMatrix& g = c.generator();
    const FieldMatrix& h = c.parity_check();
    FieldMatrix d(c.field(), g.rows(), h.rows());
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t col = 0; col < d.cols(); ++col) d.set(r, col, static_cast<std::int64_t>(rng() % 3));
    const BcjrTrellis t = bcjr_trellis(g, h, d);
    CHECK(edge_label_code(t.base) == c);
    // N_n wraps around to N_0
    FieldMatrix last = t.N.back();
    const std::size_t n = c.length();
    last = last.plus(outer_product(c.field(), g.column(n - 1), h.column(n - 1)));
    CHECK(last == t.N[0]);
  }
}

TEST_CASE("product trellis profile follows from the spans") {
  std::mt19937_64 rng(7);
  for (const auto& c : testing::sample_codes(47, 20)) {
    const SpanList spans = random_spans(c.generator(), rng);
    const ProductTrellis pt = product_trellis(c.generator(), spans);
    const ComplexityProfile cp = complexity(pt.base);
    const oracle::Profile expect = oracle::product_profile(pairs(spans), c.length());
    CHECK(cp.scp == expect.scp);
    CHECK(cp.ecp == expect.ecp);
    CHECK(edge_label_code(pt.base) == c);
  }
  CHECK_THROWS_AS(product_trellis(M(2, {{1, 1, 0}, {0, 0, 0}}), {Span(0, 1, 3), Span(0, 1, 3)}), Error);
  CHECK_THROWS_AS(product_trellis(M(2, {{1, 1, 0}}), {Span(2, 1, 3)}), Error);
}

TEST_CASE("elementary trellis") {
  const PrimeField f(3);
  const LinearTrellis t = elementary_trellis(f, FieldVector{0, 2, 1, 0}, Span(1, 2, 4));
  CHECK(complexity(t).scp == std::vector<std::size_t>{0, 0, 1, 0});
  CHECK_THROWS_AS(elementary_trellis(f, FieldVector{0, 2, 1, 0}, Span(0, 2, 4)), Error);
}

TEST_CASE("the second worked BCJR trellis") {
  const FieldMatrix g = M(2, {{0, 1, 1, 1, 1, 1}, {0, 0, 1, 1, 1, 0}, {1, 1, 0, 1, 0, 1}});
  const FieldMatrix h = M(2, {{0, 0, 1, 0, 1, 0}, {1, 0, 0, 1, 1, 0}, {1, 1, 1, 1, 0, 1}});
  const BcjrTrellis t = bcjr_trellis_from_spans(g, h, {Span(1, 5, 6), Span(2, 4, 6), Span(3, 1, 6)});
  CHECK(t.D == M(2, {{0, 0, 0}, {0, 0, 0}, {0, 1, 0}}));
  const ComplexityProfile cp = complexity(t.base);
  CHECK(cp.scp == std::vector<std::size_t>{1, 1, 1, 2, 3, 2});
  CHECK(cp.ecp == std::vector<std::size_t>{1, 2, 2, 3, 3, 2});
}

TEST_CASE("KV trellis selection errors") {
  const LinearCode c = LinearCode::from_generator(M(2, {{1, 1, 1, 1}, {0, 1, 1, 0}}));
  const EndSorted es = sorted_by_end(characteristic_pair(c, TieBreak::LexFirst));
  try {
    kv_trellis(es.pair, c.parity_check(), {0});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadSelectionSize);
  }
  // rows with spans (2,1] and (1,2] carry the same word 0110
  try {
    kv_trellis(es.pair, c.parity_check(), {1, 2});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankDeficient);
  }
  CHECK_THROWS_AS(kv_trellis(es.pair, c.parity_check(), {0, 0}), Error);
  const BcjrTrellis t = kv_trellis(es.pair, c.parity_check(), {0, 1});
  CHECK(edge_label_code(t.base) == c);
}

TEST_CASE("shifting a trellis") {
  const BcjrTrellis t = bcjr_trellis_from_spans(kG, kH, kSpans);
  CHECK(shift_trellis(t, 0).base == t.base);
  CHECK(shift_trellis(t, 5).base == t.base);
  const BcjrTrellis s = shift_trellis(t, 1);
  CHECK(edge_label_code(s.base) == cyclic_shift(LinearCode::from_generator(kG), 1));
  for (std::size_t i = 0; i < 5; ++i) CHECK(s.N[i] == t.N[(i + 1) % 5]);
  auto rot = complexity(t.base).scp;
  std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  CHECK(complexity(s.base).scp == rot);
}

TEST_CASE("staggered trellis shape checks") {
  CHECK_THROWS_AS(staggered_trellis(kG, {kG}), Error);
  const PrimeField f(11);
  const FieldMatrix g = FieldMatrix::from_rows(f, {{10, 1}});
  const std::vector<FieldMatrix> st{FieldMatrix::from_rows(f, {{0}}), FieldMatrix::from_rows(f, {{3}})};
  CHECK(staggered_display(st, g) == "0|10|3|1|0\n");
}
