#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "tbt/errors.hpp"

using namespace tbt;
using testing::M;

TEST_CASE("prime field rejects composite and oversized moduli") {
  CHECK_THROWS_AS(PrimeField(4), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_THROWS_AS(PrimeField(65537), Error);
  try {
    PrimeField(9);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrime);
  }
  const PrimeField f(65521);
  CHECK(f.mul(f.inv(12345), 12345) == 1);
}

TEST_CASE("inverses in small fields") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
    const PrimeField f(p);
    for (Residue x = 1; x < p; ++x) CHECK(f.mul(x, f.inv(x)) == 1);
    CHECK_THROWS_AS(f.inv(0), Error);
  }
}

TEST_CASE("rank agrees with naive elimination") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + rng() % 5;
      const std::size_t c = 1 + rng() % 6;
      std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
      for (auto& row : rows)
        for (auto& x : row) x = static_cast<std::int64_t>(rng() % p);
      const FieldMatrix m = M(p, rows);
      CHECK(rank(m) == oracle::rank(p, rows));
      const FieldMatrix k = left_kernel(m);
      CHECK(k.multiply(m).is_zero());
      CHECK(k.rows() == r - rank(m));
      CHECK(rank(k) == k.rows());
      CHECK(same_row_space(row_basis(m), m));
    }
  }
}

TEST_CASE("rref is reduced with unit pivots") {
  const Echelon e = rref(M(3, {{0, 2, 1, 1}, {1, 1, 0, 2}, {1, 0, 2, 0}}));
  REQUIRE(e.pivots.size() == e.reduced.rows());
  for (std::size_t r = 0; r < e.reduced.rows(); ++r) {
    CHECK(e.reduced.at(r, e.pivots[r]) == 1);
    for (std::size_t o = 0; o < e.reduced.rows(); ++o)
      if (o != r) CHECK(e.reduced.at(o, e.pivots[r]) == 0);
  }
}

TEST_CASE("linear solvers") {
  const FieldMatrix a = M(2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 0}});
  const FieldVector v = solve_unique(a, {1, 0, 1});
  CHECK(mat_vec(a, v) == FieldVector{1, 0, 1});

  const FieldMatrix singular = M(2, {{1, 1}, {1, 1}});
  try {
    solve_unique(singular, {1, 1});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnique);
  }
  try {
    solve_unique(singular, {1, 0});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoSolution);
  }
  CHECK_FALSE(solve_any(singular, {1, 0}).has_value());
  const auto x = solve_left(M(3, {{1, 2, 0}, {0, 1, 1}}), {1, 0, 1});
  REQUIRE(x.has_value());
  CHECK(vec_mat(*x, M(3, {{1, 2, 0}, {0, 1, 1}})) == FieldVector{1, 0, 1});
  CHECK_FALSE(solve_left(M(3, {{1, 2, 0}, {0, 1, 1}}), {1, 0, 2}).has_value());
}

TEST_CASE("row space intersection matches explicit sets") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint32_t p = trial % 2 ? 3 : 2;
    auto randm = [&](std::size_t r) {
      std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(4));
      for (auto& row : rows)
        for (auto& x : row) x = static_cast<std::int64_t>(rng() % p);
      return rows;
    };
    const auto a = randm(1 + rng() % 3);
    const auto b = randm(1 + rng() % 3);
    std::set<oracle::Word> expect;
    const auto sa = oracle::span_set(p, a);
    for (const auto& w : oracle::span_set(p, b))
      if (sa.count(w)) expect.insert(w);
    const FieldMatrix i = row_space_intersection(M(p, a), M(p, b));
    CHECK(oracle::span_set(p, oracle::to_rows(i), 4) == expect);
  }
}

TEST_CASE("literal form round trips") {
  const FieldMatrix m = M(5, {{1, 2, 3}, {4, 0, 1}});
  CHECK(FieldMatrix::parse(m.to_literal()) == m);
  CHECK_THROWS_AS(FieldMatrix::parse("5 2 3\n1 2\n"), Error);
  const FieldMatrix empty(PrimeField(2), 0, 3);
  CHECK(FieldMatrix::parse(empty.to_literal()) == empty);
}

TEST_CASE("matrix shape helpers") {
  const FieldMatrix m = M(2, {{1, 0, 1}, {0, 1, 1}});
  CHECK(m.transpose().transpose() == m);
  CHECK(m.col_range(1, 2) == M(2, {{0, 1}, {1, 1}}));
  CHECK(m.without_row(0) == M(2, {{0, 1, 1}}));
  CHECK(hconcat({&m, &m}).cols() == 6);
  CHECK(vconcat(m, m).rows() == 4);
  CHECK_THROWS_AS(m.multiply(m), Error);
  CHECK(outer_product(m.field(), FieldVector{1, 1}, FieldVector{0, 1}) == M(2, {{0, 1}, {0, 1}}));
}

TEST_CASE("combination walk visits the whole row space once") {
  const FieldMatrix b = M(3, {{1, 0, 2}, {0, 1, 1}});
  std::set<FieldVector> seen;
  for_each_combination(b, [&](const FieldVector& v, const FieldVector&) { seen.insert(v); });
  CHECK(seen.size() == 9);
  std::size_t visits = 0;
  CHECK_FALSE(find_in_coset(b, FieldVector{1, 1, 1}, [&](const FieldVector&) {
    ++visits;
    return false;
  }));
  CHECK(visits == 9);
}
