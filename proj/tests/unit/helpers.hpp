#pragma once

#include <cstdint>
#include <vector>

#include "tbt/code.hpp"
#include "tbt/field.hpp"
#include "tbt/suites.hpp"

namespace testing {

inline tbt::FieldMatrix M(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols = 0) {
  return tbt::FieldMatrix::from_rows(tbt::PrimeField(p), rows, cols);
}

inline tbt::LinearCode code(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows) {
  return tbt::LinearCode::from_generator(M(p, rows));
}

/// Fixed sample of small random codes with both supports full.
inline std::vector<tbt::LinearCode> sample_codes(std::uint64_t seed, std::size_t count, std::size_t max_n = 7) {
  return tbt::random_corpus(seed, count, max_n);
}

}  // namespace testing
