#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "tbt/char_duality.hpp"
#include "tbt/errors.hpp"

using namespace tbt;
using testing::M;

namespace {

SpanList spans(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& v) {
  SpanList out;
  for (auto [a, b] : v) out.emplace_back(a, b, n);
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("dual construction on the self-dual [4,2] code") {
  const FieldMatrix h = M(2, {{1, 1, 1, 1}, {0, 1, 1, 0}});
  const CharacteristicPair x{M(2, {{1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 1, 0}, {1, 1, 1, 1}}),
                             spans(4, {{3, 0}, {2, 1}, {1, 2}, {0, 3}})};
  const DualCharResult r = dual_characteristic_pair(x, h);
  const std::vector<FieldVector> v{{1, 1}, {0, 1}, {1, 0}, {1, 1}};
  CHECK(r.v == v);
  CHECK(r.y.X == M(2, {{1, 0, 0, 1}, {0, 1, 1, 0}, {1, 1, 1, 1}, {1, 0, 0, 1}}));
  CHECK(r.y.T == spans(4, {{0, 3}, {1, 2}, {2, 1}, {3, 0}}));
  for (std::size_t m = 0; m < 4; ++m) CHECK(vec_mat(r.v[m], h) == r.y.X.row_copy(m));
  CHECK(verify_rank_equivalence(r).ok());

  // pairing the code with its own characteristic pair breaks the rank condition
  const CharacteristicPair self{M(2, {{1, 1, 1, 1}, {0, 1, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}}),
                                spans(4, {{0, 3}, {1, 2}, {2, 1}, {3, 0}})};
  CHECK_FALSE(check_dual_rank_condition(r.x_by_end, self).ok());
}

TEST_CASE("dual construction over GF(3)") {
  const FieldMatrix h = M(3, {{1, 1, 0, 0}, {0, 0, 1, 2}});
  const CharacteristicPair x{M(3, {{1, 2, 0, 0}, {2, 1, 0, 0}, {0, 0, 1, 1}, {1, 2, 1, 1}}),
                             spans(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}})};
  const DualCharResult r = dual_characteristic_pair(x, h);
  CHECK(r.y.T == spans(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}}));
  CHECK(r.y.X == M(3, {{1, 1, 0, 0}, {1, 1, 1, 2}, {0, 0, 1, 2}, {0, 0, 2, 1}}));
  const CharacteristicCheck chk =
      check_characteristic_pair(dual_code(LinearCode::from_generator(x.X)), r.y);
  CHECK(chk.ok());

  // primal rows 2 and 3 of the input end at 3 and 2
  const DualSelection sel = dual_selection(r, {2, 3});
  CHECK(sel.S == spans(4, {{3, 2}, {2, 3}}));
  CHECK(sel.S_hat == spans(4, {{0, 1}, {1, 0}}));
  CHECK(require_dual_kv_pair(r, sel).report.ok());
  CHECK(require_bcjr_symmetry(sel).ok());
  CHECK(check_strong_duality(sel, h).ok());
}

TEST_CASE("independent spans leave a dependent dual selection") {
  const LinearCode c = LinearCode::from_generator(
      M(2, {{1, 0, 1, 0, 1, 1, 0, 0}, {0, 1, 1, 1, 1, 0, 0, 0}, {0, 0, 1, 0, 1, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1, 0}}));
  const CharacteristicPair x = characteristic_pair(c, TieBreak::LexFirst);
  const EndSorted es = sorted_by_end(x);
  const std::vector<std::size_t> K{1, 2, 3, 6};
  CHECK(es.pair.T[6] == Span(3, 6, 8));
  const DualSelection sel = make_dual_selection(es.pair, x, K);
  CHECK(rank(sel.X_sel) == 4);
  CHECK(rank(sel.Y_sel) == 3);
  SpanList got = sel.S_hat;
  std::sort(got.begin(), got.end());
  CHECK(got == spans(8, {{0, 5}, {4, 1}, {5, 0}, {7, 2}}));
  const RankEquivalenceReport rep = check_dual_rank_condition(es.pair, x);
  CHECK_FALSE(rep.ok());
  CHECK(std::find(rep.violations.begin(), rep.violations.end(), K) != rep.violations.end());

  // the constructed dual pair has no violations
  CHECK(verify_rank_equivalence(dual_characteristic_pair(x, c.parity_check())).ok());
}

TEST_CASE("rank equivalence and the full suite on random codes") {
  for (const auto& c : testing::sample_codes(83, 20)) {
    const KvConjectureReport rep = kv_conjecture_suite(c, TieBreak::Normalized);
    CHECK(rep.ok());
    CHECK(rep.dual_pair_valid);
    CHECK(rep.spans_reversed);
    std::size_t full = 0;
    for (const auto& e : rep.ranks.entries) full += e.x_full;
    CHECK(rep.selections.size() == full);
  }
}

TEST_CASE("results do not depend on the worker count") {
  const LinearCode c = LinearCode::from_generator(
      M(2, {{1, 0, 1, 0, 1, 1, 0, 0}, {0, 1, 1, 1, 1, 0, 0, 0}, {0, 0, 1, 0, 1, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1, 0}}));
  const KvConjectureReport one = kv_conjecture_suite(c, TieBreak::LexFirst, 1);
  const KvConjectureReport three = kv_conjecture_suite(c, TieBreak::LexFirst, 3);
  REQUIRE(one.selections.size() == three.selections.size());
  for (std::size_t i = 0; i < one.selections.size(); ++i) {
    CHECK(one.selections[i].K == three.selections[i].K);
    CHECK(one.selections[i].ok() == three.selections[i].ok());
  }
}

TEST_CASE("dual construction errors") {
  const FieldMatrix h = M(2, {{1, 1, 1, 1}, {0, 1, 1, 0}});
  const CharacteristicPair x{M(2, {{1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 1, 0}, {1, 1, 1, 1}}),
                             spans(4, {{3, 0}, {2, 1}, {1, 2}, {0, 3}})};
  CHECK(code_of([&] { dual_characteristic_pair(x, M(2, {{1, 0, 0, 0}, {0, 1, 1, 0}})); }) ==
        ErrorCode::NotOrthogonal);
  CharacteristicPair wrong = x;
  wrong.T[0] = Span(2, 0, 4);
  CHECK(code_of([&] { dual_characteristic_pair(wrong, h); }) == ErrorCode::InvalidCharacteristicPair);
  const DualCharResult r = dual_characteristic_pair(x, h);
  CHECK(code_of([&] { dual_selection(r, {0}); }) == ErrorCode::BadSize);
  CHECK(code_of([&] { dual_selection(r, {1, 1}); }) == ErrorCode::BadSize);
  CHECK(code_of([&] { dual_selection(r, {0, 4}); }) == ErrorCode::BadSize);
  CHECK(code_of([&] { dual_kv_pair(r, dual_selection(r, {1, 2})); }) == ErrorCode::RankDeficient);
}

TEST_CASE("selection enumeration") {
  const auto all = all_selections(4, 2);
  CHECK(all.size() == 6);
  CHECK(all.front() == std::vector<std::size_t>{0, 1});
  CHECK(all.back() == std::vector<std::size_t>{2, 3});
  CHECK(all_selections(3, 0).size() == 1);
}
