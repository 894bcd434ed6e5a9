#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "tbt/field.hpp"
#include "tbt/span.hpp"
#include "tbt/trellis.hpp"

namespace tbt {

using Json = nlohmann::ordered_json;

/// Contents of a code file: {"p", "n", "generators"} plus optional "parity_checks" and "spans"
/// ([[a, b], ...], one per generator row) and a free-form "name".
struct CodeFile {
  std::string name;
  FieldMatrix generators;
  std::optional<FieldMatrix> parity_checks;
  std::optional<SpanList> spans;
};

/// All parse functions throw Error(ParseError) on malformed input.
CodeFile parse_code_file(std::string_view text);
CodeFile code_file_from_json(const Json& j);
Json code_file_to_json(const CodeFile& c);
CodeFile read_code_file(const std::string& path);

Json matrix_to_json(const FieldMatrix& m);
FieldMatrix matrix_from_json(const PrimeField& f, const Json& j, std::size_t cols);

Json span_to_json(const Span& s);
Span span_from_json(const Json& j);
Json spans_to_json(const SpanList& spans);

/// {"p", "n", "sections": [{"ambient_in", "ambient_out", "state_basis", "transitions"}, ...]}
Json trellis_to_json(const LinearTrellis& t);
LinearTrellis trellis_from_json(const Json& j);
LinearTrellis parse_trellis(std::string_view text);

/// Either kind of input file, told apart by the "sections" key.
bool is_trellis_json(const Json& j);
Json parse_json(std::string_view text);
Json read_json_file(const std::string& path);

/// "a,b;a,b;..." as accepted on the command line.
SpanList parse_span_list(std::string_view text, std::size_t n);
std::vector<std::size_t> parse_index_list(std::string_view text);

Json profile_to_json(const ComplexityProfile& p);

}  // namespace tbt
