#include "tbt/fixtures.hpp"

#include <utility>

#include "tbt/errors.hpp"

namespace tbt {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_fixtures();
}

const std::vector<Fixture>& fixture_corpus() {
  static const std::vector<Fixture> corpus = [] {
    std::vector<Fixture> out;
    for (const auto& [stem, text] : detail::embedded_fixtures()) {
      Json doc = parse_json(text);
      CodeFile code = code_file_from_json(doc);
      out.push_back({std::string(stem), std::move(doc), std::move(code)});
    }
    return out;
  }();
  return corpus;
}

const Fixture& fixture(std::string_view name) {
  for (const auto& f : fixture_corpus())
    if (f.name == name || f.code.name == name) return f;
  throw Error(ErrorCode::InvalidArgument, "unknown fixture " + std::string(name));
}

}  // namespace tbt
