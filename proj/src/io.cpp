#include "tbt/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "tbt/errors.hpp"

namespace tbt {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::int64_t int_of(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) parse_fail(what + " must be an integer");
  return j.get<std::int64_t>();
}

std::size_t size_of(const Json& j, const std::string& what) {
  const std::int64_t v = int_of(j, what);
  if (v < 0) parse_fail(what + " must be non-negative");
  return static_cast<std::size_t>(v);
}

PrimeField field_from(const Json& j) {
  const std::int64_t p = int_of(field_of(j, "p"), "p");
  if (p < 2 || p > 0xFFFF) throw Error(ErrorCode::NotPrime, "field size out of range");
  return PrimeField(static_cast<std::uint32_t>(p));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) { return parse_json(slurp(path)); }

Json matrix_to_json(const FieldMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

FieldMatrix matrix_from_json(const PrimeField& f, const Json& j, std::size_t cols) {
  if (!j.is_array()) parse_fail("matrix must be an array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) parse_fail("matrix row must be an array");
    std::vector<std::int64_t> r;
    for (const auto& e : row) r.push_back(int_of(e, "matrix entry"));
    if (r.size() != cols) parse_fail("matrix row has " + std::to_string(r.size()) + " entries, expected " +
                                     std::to_string(cols));
    rows.push_back(std::move(r));
  }
  return FieldMatrix::from_rows(f, rows, cols);
}

Json span_to_json(const Span& s) { return Json{{"a", s.a}, {"b", s.b}, {"n", s.n}}; }

Span span_from_json(const Json& j) {
  return Span(size_of(field_of(j, "a"), "a"), size_of(field_of(j, "b"), "b"), size_of(field_of(j, "n"), "n"));
}

Json spans_to_json(const SpanList& spans) {
  Json out = Json::array();
  for (const auto& s : spans) out.push_back(span_to_json(s));
  return out;
}

CodeFile code_file_from_json(const Json& j) {
  const PrimeField f = field_from(j);
  const std::size_t n = size_of(field_of(j, "n"), "n");
  if (n == 0) parse_fail("code length must be positive");
  CodeFile c{j.value("name", std::string()), matrix_from_json(f, field_of(j, "generators"), n), std::nullopt,
             std::nullopt};
  if (j.contains("parity_checks")) c.parity_checks = matrix_from_json(f, j.at("parity_checks"), n);
  if (j.contains("spans")) {
    const Json& s = j.at("spans");
    if (!s.is_array()) parse_fail("spans must be an array");
    SpanList spans;
    for (const auto& e : s) {
      if (e.is_array() && e.size() == 2) spans.push_back(Span(size_of(e[0], "a"), size_of(e[1], "b"), n));
      else if (e.is_object()) spans.push_back(span_from_json(e));
      else parse_fail("span must be [a, b] or {\"a\", \"b\", \"n\"}");
      if (spans.back().n != n) parse_fail("span length differs from the code length");
    }
    c.spans = std::move(spans);
  }
  return c;
}

CodeFile parse_code_file(std::string_view text) { return code_file_from_json(parse_json(text)); }

CodeFile read_code_file(const std::string& path) { return code_file_from_json(read_json_file(path)); }

Json code_file_to_json(const CodeFile& c) {
  Json j;
  if (!c.name.empty()) j["name"] = c.name;
  j["p"] = c.generators.field().modulus();
  j["n"] = c.generators.cols();
  j["generators"] = matrix_to_json(c.generators);
  if (c.parity_checks) j["parity_checks"] = matrix_to_json(*c.parity_checks);
  if (c.spans) {
    Json s = Json::array();
    for (const auto& sp : *c.spans) s.push_back(Json::array({sp.a, sp.b}));
    j["spans"] = std::move(s);
  }
  return j;
}

Json trellis_to_json(const LinearTrellis& t) {
  Json sections = Json::array();
  for (const auto& s : t.sections()) {
    sections.push_back(Json{{"ambient_in", s.ambient_in},
                            {"ambient_out", s.ambient_out},
                            {"state_basis", matrix_to_json(s.state_basis)},
                            {"transitions", matrix_to_json(s.transitions)}});
  }
  return Json{{"p", t.field().modulus()}, {"n", t.depth()}, {"sections", std::move(sections)}};
}

LinearTrellis trellis_from_json(const Json& j) {
  const PrimeField f = field_from(j);
  const std::size_t n = size_of(field_of(j, "n"), "n");
  const Json& secs = field_of(j, "sections");
  if (!secs.is_array() || secs.size() != n) parse_fail("expected " + std::to_string(n) + " sections");
  std::vector<TrellisSection> sections;
  for (const auto& s : secs) {
    const std::size_t in = size_of(field_of(s, "ambient_in"), "ambient_in");
    const std::size_t out = size_of(field_of(s, "ambient_out"), "ambient_out");
    sections.push_back({in, out, matrix_from_json(f, field_of(s, "state_basis"), in),
                        matrix_from_json(f, field_of(s, "transitions"), in + 1 + out)});
  }
  return LinearTrellis(f, std::move(sections));
}

LinearTrellis parse_trellis(std::string_view text) { return trellis_from_json(parse_json(text)); }

bool is_trellis_json(const Json& j) { return j.is_object() && j.contains("sections"); }

SpanList parse_span_list(std::string_view text, std::size_t n) {
  SpanList out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(';', pos), text.size());
    const std::string_view item = text.substr(pos, end - pos);
    const std::size_t comma = item.find(',');
    if (comma == std::string_view::npos) parse_fail("span \"" + std::string(item) + "\" is not a,b");
    const auto idx = parse_index_list(item);
    if (idx.size() != 2) parse_fail("span \"" + std::string(item) + "\" is not a,b");
    out.emplace_back(idx[0], idx[1], n);
    pos = end + 1;
  }
  return out;
}

std::vector<std::size_t> parse_index_list(std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::size_t value = 0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size())
      parse_fail("\"" + std::string(item) + "\" is not a non-negative integer");
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

Json profile_to_json(const ComplexityProfile& p) { return Json{{"scp", p.scp}, {"ecp", p.ecp}}; }

}  // namespace tbt
