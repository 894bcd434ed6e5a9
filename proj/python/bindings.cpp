#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "tbt/build.hpp"
#include "tbt/char_duality.hpp"
#include "tbt/code.hpp"
#include "tbt/dual.hpp"
#include "tbt/errors.hpp"
#include "tbt/fixtures.hpp"
#include "tbt/io.hpp"
#include "tbt/suites.hpp"

namespace py = pybind11;
using namespace tbt;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;
using SpanPairs = std::vector<std::pair<std::size_t, std::size_t>>;

py::object to_python(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(to_python(e));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
      return out;
    }
    default: return py::none();
  }
}

FieldMatrix matrix(std::uint32_t p, const Rows& rows, std::size_t cols = 0) {
  return FieldMatrix::from_rows(PrimeField(p), rows, cols);
}

SpanList span_list(const SpanPairs& pairs, std::size_t n) {
  SpanList out;
  for (auto [a, b] : pairs) out.emplace_back(a, b, n);
  return out;
}

SpanPairs span_pairs(const SpanList& spans) {
  SpanPairs out;
  for (const auto& s : spans) out.emplace_back(s.a, s.b);
  return out;
}

TieBreak tie_break_of(const std::string& name) {
  if (name == "lex") return TieBreak::LexFirst;
  if (name == "normalized") return TieBreak::Normalized;
  throw Error(ErrorCode::InvalidArgument, "tie_break must be \"lex\" or \"normalized\"");
}

py::dict profile_dict(const LinearTrellis& t) {
  const ComplexityProfile cp = complexity(t);
  py::dict d;
  d["scp"] = cp.scp;
  d["ecp"] = cp.ecp;
  return d;
}

}  // namespace

PYBIND11_MODULE(_tbtrellis, m) {
  m.doc() = "Tail-biting trellises of linear codes over prime fields";

  // Kept alive for the lifetime of the interpreter; the translator has no other way to reach it.
  static py::handle error_type = py::exception<Error>(m, "TrellisError", PyExc_ValueError).inc_ref();
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      py::object exc = error_type(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def(
      "characteristic_pair",
      [](std::uint32_t p, const Rows& generators, const std::string& tie_break, const std::string& order) {
        const LinearCode c = LinearCode::from_generator(matrix(p, generators));
        CharacteristicPair x = characteristic_pair(c, tie_break_of(tie_break));
        if (order == "end") x = sorted_by_end(x).pair;
        else if (order != "start") throw Error(ErrorCode::InvalidArgument, "order must be \"start\" or \"end\"");
        py::dict d;
        d["X"] = x.X.to_rows();
        d["T"] = span_pairs(x.T);
        return d;
      },
      py::arg("p"), py::arg("generators"), py::arg("tie_break") = "lex", py::arg("order") = "end",
      "Characteristic generators and spans; rows sorted by span end unless order='start'.");

  m.def(
      "characteristic_spans",
      [](std::uint32_t p, const Rows& generators) {
        return span_pairs(characteristic_spans(LinearCode::from_generator(matrix(p, generators))));
      },
      py::arg("p"), py::arg("generators"));

  m.def(
      "parity_check",
      [](std::uint32_t p, const Rows& generators) {
        return LinearCode::from_generator(matrix(p, generators)).parity_check().to_rows();
      },
      py::arg("p"), py::arg("generators"));

  m.def(
      "bcjr_trellis",
      [](std::uint32_t p, const Rows& G, const Rows& H, const SpanPairs& spans) {
        const FieldMatrix g = matrix(p, G);
        const BcjrTrellis t = bcjr_trellis_from_spans(g, matrix(p, H, g.cols()), span_list(spans, g.cols()));
        py::dict d = profile_dict(t.base);
        std::vector<Rows> states;
        for (const auto& n : t.N) states.push_back(n.to_rows());
        d["D"] = t.D.to_rows();
        d["states"] = states;
        d["staggered"] = staggered_display(t.N, t.G);
        d["biproper"] = is_biproper(t.base);
        d["one_to_one"] = is_one_to_one(t.base);
        return d;
      },
      py::arg("p"), py::arg("G"), py::arg("H"), py::arg("spans"));

  m.def(
      "product_trellis",
      [](std::uint32_t p, const Rows& G, const SpanPairs& spans) {
        const FieldMatrix g = matrix(p, G);
        const ProductTrellis t = product_trellis(g, span_list(spans, g.cols()));
        py::dict d = profile_dict(t.base);
        d["local_dual"] = profile_dict(local_dual(t.base));
        d["biproper"] = is_biproper(t.base);
        return d;
      },
      py::arg("p"), py::arg("G"), py::arg("spans"));

  m.def(
      "dual_characteristic_pair",
      [](std::uint32_t p, const Rows& X, const SpanPairs& T, const Rows& H) {
        const FieldMatrix x = matrix(p, X);
        const DualCharResult r =
            dual_characteristic_pair({x, span_list(T, x.cols())}, matrix(p, H, x.cols()));
        py::dict d;
        d["Y"] = r.y.X.to_rows();
        d["T_hat"] = span_pairs(r.y.T);
        d["v"] = r.v;
        return d;
      },
      py::arg("p"), py::arg("X"), py::arg("T"), py::arg("H"),
      "Dual characteristic pair built from (X, T) and a parity check matrix H. Rows of Y follow the "
      "span starts.");

  m.def(
      "kv_conjecture",
      [](std::uint32_t p, const Rows& generators, const std::string& tie_break, std::size_t jobs) {
        const LinearCode c = LinearCode::from_generator(matrix(p, generators));
        return to_python(kv_report_to_json(kv_conjecture_suite(c, tie_break_of(tie_break), jobs)));
      },
      py::arg("p"), py::arg("generators"), py::arg("tie_break") = "lex", py::arg("jobs") = 1);

  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed, std::size_t random_codes, std::size_t jobs) {
        SuiteOptions o;
        o.seed = seed;
        o.random_codes = random_codes;
        o.jobs = jobs;
        return to_python(run_suite(name, o).report);
      },
      py::arg("name"), py::arg("seed") = 1, py::arg("random_codes") = 20, py::arg("jobs") = 1);

  m.def("fixture_names", [] {
    std::vector<std::string> out;
    for (const auto& f : fixture_corpus()) out.push_back(f.name);
    return out;
  });
  m.def("fixture", [](const std::string& name) { return to_python(fixture(name).document); }, py::arg("name"));
}
