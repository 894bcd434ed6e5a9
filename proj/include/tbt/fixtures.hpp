#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tbt/io.hpp"

namespace tbt {

/// One worked example shipped with the library: a code file plus the values it is known to produce
/// under the "expected" key.
struct Fixture {
  std::string name;
  Json document;
  CodeFile code;

  const Json& expected() const { return document.at("expected"); }
};

/// Every embedded fixture, sorted by file name.
const std::vector<Fixture>& fixture_corpus();

/// Lookup by file stem ("hamming_8_4") or by the "name" field ("hamming-8-4").
/// Throws InvalidArgument for unknown names.
const Fixture& fixture(std::string_view name);

}  // namespace tbt
