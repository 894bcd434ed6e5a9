#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "tbt/char_duality.hpp"
#include "tbt/dual.hpp"
#include "tbt/errors.hpp"

using namespace tbt;
using testing::M;

namespace {

BcjrTrellis example_a() {
  return bcjr_trellis_from_spans(M(2, {{0, 1, 1, 1, 0}, {1, 0, 0, 1, 0}, {0, 1, 1, 0, 1}}),
                                 M(2, {{1, 0, 1, 1, 1}, {0, 1, 1, 0, 0}}),
                                 {Span(1, 3, 5), Span(3, 0, 5), Span(2, 1, 5)});
}

void check_against_oracle(const LinearTrellis& t) {
  const auto p = static_cast<std::int64_t>(t.field().modulus());
  const LinearTrellis d = local_dual(t, standard_pairing(t));
  const std::size_t n = t.depth();
  for (std::size_t i = 0; i < n; ++i) {
    const auto primal = oracle::span_set(p, oracle::to_rows(t.transitions(i)), t.ambient(i) + 1 + t.ambient((i + 1) % n));
    const auto vin = oracle::span_set(p, oracle::to_rows(t.state_basis(i)), t.ambient(i));
    const auto vout = oracle::span_set(p, oracle::to_rows(t.state_basis((i + 1) % n)), t.ambient((i + 1) % n));
    const auto expect = oracle::local_dual_edges(p, primal, t.ambient(i), vin, vout);
    const auto got = oracle::span_set(p, oracle::to_rows(d.transitions(i)), d.ambient(i) + 1 + d.ambient((i + 1) % n));
    CHECK(got == expect);
  }
}

std::vector<std::size_t> first_full_rank(const CharacteristicPair& x, std::size_t k) {
  for (const auto& K : all_selections(x.X.rows(), k))
    if (rank(x.X.select_rows(K)) == k) return K;
  return {};
}

}  // namespace

TEST_CASE("local dual of the worked example under the standard pairing") {
  const BcjrTrellis t = example_a();
  const LinearTrellis d = local_dual(t.base, standard_pairing(t.base));
  const std::vector<FieldMatrix> expect{
      M(2, {{1, 0, 1, 0, 0}, {0, 1, 0, 0, 1}}), M(2, {{0, 1, 1, 0, 1}}),
      M(2, {{0, 0, 1, 1, 0}, {0, 1, 0, 1, 1}}), M(2, {{1, 0, 1, 1, 0}, {0, 1, 0, 0, 1}}),
      M(2, {{1, 0, 0, 1, 1}, {0, 1, 0, 0, 1}, {0, 1, 1, 0, 0}})};
  for (std::size_t i = 0; i < 5; ++i) CHECK(same_row_space(d.transitions(i), expect[i]));
  CHECK_FALSE(is_reduced(d));
  check_against_oracle(t.base);
}

TEST_CASE("local dual of a product trellis") {
  const ProductTrellis pt = product_trellis(M(2, {{0, 1, 1}, {1, 0, 1}}), {Span(1, 2, 3), Span(0, 2, 3)});
  CHECK_FALSE(is_biproper(pt.base));
  const LinearTrellis d = local_dual(pt.base, standard_pairing(pt.base));
  const ComplexityProfile cp = complexity(d);
  CHECK(cp.scp == std::vector<std::size_t>{0, 1, 2});
  CHECK(cp.ecp == std::vector<std::size_t>{1, 2, 1});
  CHECK(same_row_space(d.transitions(0), M(2, {{0, 0, 1, 0, 1}})));
  CHECK(same_row_space(d.transitions(1), M(2, {{0, 0, 1, 1, 0}, {0, 1, 0, 0, 1}})));
  CHECK(same_row_space(d.transitions(2), M(2, {{1, 1, 1, 0, 0}})));
  CHECK_FALSE(is_reduced(d));
  CHECK(edge_label_code(d) == LinearCode::from_generator(M(2, {{1, 1, 1}})));
}

TEST_CASE("local dual agrees with brute force on random trellises") {
  std::mt19937_64 rng(61);
  for (const auto& c : testing::sample_codes(67, 15, 6)) {
    SpanList spans;
    for (std::size_t r = 0; r < c.dimension(); ++r) {
      const auto all = spans_of_vector(c.generator().row(r));
      spans.push_back(all[rng() % all.size()]);
    }
    const ProductTrellis pt = product_trellis(c.generator(), spans);
    std::size_t total = 0;
    for (auto e : complexity(pt.base).ecp) total += e;
    if (total > 14) continue;
    check_against_oracle(pt.base);
    CHECK(edge_label_code(local_dual(pt.base)) == dual_code(c));
  }
}

TEST_CASE("BCJR dual is a subtrellis of the local dual") {
  std::mt19937_64 rng(71);
  for (const auto& c : testing::sample_codes(73, 15)) {
    FieldMatrix d(c.field(), c.dimension(), c.length() - c.dimension());
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t col = 0; col < d.cols(); ++col) d.set(r, col, static_cast<std::int64_t>(rng() % 3));
    const BcjrTrellis t = bcjr_trellis(c.generator(), c.parity_check(), d);
    const SubtrellisReport rep = check_subtrellis_dual(t);
    CHECK(rep.ok());
    CHECK(edge_label_code(bcjr_dual(t).base) == dual_code(c));
  }
  const SubtrellisReport a = check_subtrellis_dual(example_a());
  CHECK(a.ok());
  CHECK(a.gap == std::vector<std::size_t>{0, 0, 0, 0, 1});
}

TEST_CASE("KV trellises are dual to their BCJR duals") {
  for (const auto& c : testing::sample_codes(79, 12)) {
    const EndSorted es = sorted_by_end(characteristic_pair(c, TieBreak::Normalized));
    const auto sel = first_full_rank(es.pair, c.dimension());
    REQUIRE(sel.size() == c.dimension());
    const KvDualityReport rep = verify_kv_duality(es.pair, c.parity_check(), sel);
    CHECK(rep.ok());
  }
}

TEST_CASE("degenerate pairings are rejected") {
  const BcjrTrellis t = example_a();
  std::vector<FieldMatrix> a, k;
  for (std::size_t i = 0; i < 5; ++i) {
    a.push_back(t.base.state_basis(i));
    k.push_back(FieldMatrix(t.base.field(), a.back().rows(), a.back().rows()));
  }
  try {
    local_dual(t.base, spanning_pairing(t.base, a, a, k));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegeneratePairing);
  }
}

TEST_CASE("pairings that describe the same duality give the same dual profile") {
  const BcjrTrellis t = example_a();
  const ComplexityProfile d0 = complexity(local_dual(t.base, default_pairing(t.base)));
  CHECK(complexity(local_dual(t.base, standard_pairing(t.base))) == d0);
  CHECK(complexity(local_dual(t.base, bcjr_transpose_pairing(t))) == d0);
}
