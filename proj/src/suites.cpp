#include "tbt/suites.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "tbt/build.hpp"
#include "tbt/dual.hpp"
#include "tbt/errors.hpp"
#include "tbt/fixtures.hpp"

namespace tbt {

namespace {

class Checks {
 public:
  void add(const std::string& name, bool ok, const std::string& detail = {}) {
    Json c{{"name", name}, {"ok", ok}};
    if (!detail.empty()) c["detail"] = detail;
    items_.push_back(std::move(c));
    ok_ = ok_ && ok;
  }
  // Runs fn and records a failure instead of propagating library errors.
  template <typename Fn>
  void guard(const std::string& name, Fn&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      add(name, false, std::string(e.what()));
    }
  }
  bool ok() const { return ok_; }
  Json take() { return std::move(items_); }

 private:
  Json items_ = Json::array();
  bool ok_ = true;
};

SpanList spans_from(const Json& j, std::size_t n) {
  SpanList out;
  for (const auto& s : j) out.emplace_back(s.at(0).get<std::size_t>(), s.at(1).get<std::size_t>(), n);
  return out;
}

std::string join_lines(const Json& lines) {
  std::string out;
  for (const auto& l : lines) out += l.get<std::string>() + "\n";
  return out;
}

FieldMatrix mat(const Fixture& fx, const char* key, std::size_t cols = 0) {
  const auto& g = fx.code.generators;
  return matrix_from_json(g.field(), fx.expected().at(key), cols ? cols : g.cols());
}

bool contains_span(const SpanList& list, const Span& s) { return std::find(list.begin(), list.end(), s) != list.end(); }

SpanList sorted(SpanList s) {
  std::sort(s.begin(), s.end());
  return s;
}

// Rows of y reordered to follow `order`; each span of `order` must occur in y.T.
FieldMatrix rows_in_span_order(const CharacteristicPair& y, const SpanList& order) {
  std::vector<std::size_t> idx;
  for (const auto& s : order) {
    const auto it = std::find(y.T.begin(), y.T.end(), s);
    if (it == y.T.end()) throw Error(ErrorCode::VerificationFailed, "span " + s.to_string() + " missing");
    idx.push_back(static_cast<std::size_t>(it - y.T.begin()));
  }
  return y.X.select_rows(idx);
}

// Local dual sections against printed generator matrices, up to row space.
void compare_local_dual(Checks& c, const std::string& prefix, const LinearTrellis& local, const Json& printed) {
  for (std::size_t j = 0; j < printed.size(); ++j) {
    const FieldMatrix e = matrix_from_json(local.field(), printed[j], local.transitions(j).cols());
    c.add(prefix + " section " + std::to_string(j), same_row_space(e, local.transitions(j)));
  }
}

std::string profile_text(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

std::vector<std::size_t> from_json_list(const Json& j) { return j.get<std::vector<std::size_t>>(); }

// Dual cycle rows (w_{m,0}, c^m_0, ..., w_{m,0}) of the construction as state matrices per time.
std::vector<FieldMatrix> dual_cycle_states(const DualCharResult& res) {
  const std::size_t n = res.y.X.cols();
  const std::size_t r = res.H.rows();
  std::vector<FieldMatrix> states;
  for (std::size_t j = 0; j < n; ++j) {
    FieldMatrix w(res.H.field(), n, r);
    for (std::size_t m = 0; m < n; ++m)
      if (res.y.T[m].contains(j))
        for (std::size_t c = 0; c < r; ++c) w.set(m, c, res.v[m][c]);
    states.push_back(std::move(w));
  }
  return states;
}

void example_bcjr_a(Checks& c) {
  const Fixture& fx = fixture("bcjr_example_a");
  const auto& ex = fx.expected();
  const FieldMatrix& G = fx.code.generators;
  const FieldMatrix& H = *fx.code.parity_checks;
  const SpanList S = *fx.code.spans;
  const std::size_t n = G.cols();
  const LinearCode code = LinearCode::from_generator(G);
  const BcjrTrellis t = bcjr_trellis_from_spans(G, H, S);

  c.add("bcjr-a staggered state matrices", staggered_display(t.N, G) == join_lines(ex.at("staggered")));
  const SpanList cs = characteristic_spans(code);
  bool spans_ok = true;
  for (const auto& s : spans_from(ex.at("characteristic"), n)) spans_ok = spans_ok && contains_span(cs, s);
  for (const auto& s : spans_from(ex.at("not_characteristic"), n)) spans_ok = spans_ok && !contains_span(cs, s);
  c.add("bcjr-a characteristic spans", spans_ok, to_string(cs));
  const FieldVector w = ex.at("witness_codeword").get<FieldVector>();
  c.add("bcjr-a witness codeword", code.contains(w) && is_span_of(Span(4, 0, n), w));
  c.add("bcjr-a one-to-one", is_one_to_one(t.base) == ex.at("one_to_one").get<bool>());
  c.add("bcjr-a isomorphic to product trellis",
        find_isomorphism(t.base, product_trellis(G, S).base).has_value());

  const FieldMatrix witness = matrix_from_json(G.field(), Json::array({ex.at("kernel_witness")}), H.rows());
  bool in_all = true;
  for (const auto& N : t.N) in_all = in_all && row_space_contains(N, witness);
  c.add("bcjr-a common state witness", in_all);

  const LinearTrellis local = local_dual(t.base, standard_pairing(t.base));
  compare_local_dual(c, "bcjr-a local dual", local, ex.at("local_dual_standard"));
  const SubtrellisReport sub = check_subtrellis_dual(t);
  const std::size_t bad = ex.at("non_reduced_section").get<std::size_t>();
  bool gap_ok = sub.ok();
  for (std::size_t j = 0; j < n; ++j) gap_ok = gap_ok && ((sub.gap[j] != 0) == (j == bad));
  c.add("bcjr-a BCJR dual is a proper subtrellis", gap_ok, profile_text(sub.gap));
  c.add("bcjr-a local dual not reduced", !is_reduced(local));
  c.add("bcjr-a reduced local dual isomorphic to the BCJR dual",
        find_isomorphism(reduce(local), bcjr_dual(t).base).has_value());
  c.add("bcjr-a shift", shift_trellis(t, 1).N[0] == t.N[1]);

  // KV trellis on (1,3] and (2,1]; k = 3 needs one more characteristic span, the first that keeps
  // the selection independent.
  const EndSorted es = sorted_by_end(characteristic_pair(code, TieBreak::LexFirst));
  std::vector<std::size_t> sel;
  for (const auto& s : spans_from(ex.at("characteristic"), n)) sel.push_back(s.b);
  for (std::size_t l = 0; l < n && sel.size() < code.dimension(); ++l) {
    if (std::find(sel.begin(), sel.end(), l) != sel.end()) continue;
    std::vector<std::size_t> trial = sel;
    trial.push_back(l);
    if (rank(es.pair.X.select_rows(trial)) == trial.size()) sel = trial;
  }
  std::sort(sel.begin(), sel.end());
  c.add("bcjr-a KV trellis is dual to its BCJR dual", verify_kv_duality(es.pair, H, sel).ok(), profile_text(sel));
}

void example_selfdual(Checks& c, const SearchBudget& budget) {
  const Fixture& fx = fixture("selfdual_4_2");
  const auto& ex = fx.expected();
  const FieldMatrix& H = *fx.code.parity_checks;
  const std::size_t n = H.cols();
  const LinearCode code = LinearCode::from_generator(fx.code.generators);
  const FieldMatrix X = mat(fx, "X");
  const SpanList T = spans_from(ex.at("T"), n);

  const EndSorted lex = sorted_by_end(characteristic_pair(code, TieBreak::LexFirst));
  // The printed X is a characteristic matrix but not the lexicographically first one: that one
  // realizes (0,3] by 1001 instead of 1111.
  c.add("selfdual characteristic spans", lex.pair.T == T, to_string(lex.pair.T));
  c.add("selfdual printed X is a characteristic matrix", check_characteristic_pair(code, {X, T}).ok());
  c.add("selfdual lexicographically first X differs in the (0,3] row",
        lex.pair.X.row_copy(3) == FieldVector{1, 0, 0, 1} && lex.pair.X.without_row(3) == X.without_row(3));
  const BcjrTrellis full = bcjr_trellis_from_spans(X, H, T);
  c.add("selfdual staggered state matrices", staggered_display(full.N, X) == join_lines(ex.at("staggered")));

  const CharacteristicPair x{X, T};
  std::vector<LinearTrellis> kv;
  std::size_t deficient = 0;
  for (const auto& sel : all_selections(n, code.dimension())) {
    try {
      kv.push_back(kv_trellis(x, H, sel).base);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::RankDeficient) ++deficient;
      else throw;
    }
  }
  c.add("selfdual KV trellis count", kv.size() == ex.at("kv_trellis_count").get<std::size_t>() && deficient == 1,
        std::to_string(kv.size()));
  bool distinct = true;
  for (std::size_t a = 0; a < kv.size(); ++a)
    for (std::size_t b = a + 1; b < kv.size(); ++b)
      distinct = distinct && !(complexity(kv[a]) == complexity(kv[b])) && !find_isomorphism(kv[a], kv[b], budget);
  c.add("selfdual KV trellises pairwise non-isomorphic", distinct);

  const DualCharResult res = dual_characteristic_pair(x, H);
  std::vector<FieldVector> v;
  for (const auto& row : ex.at("v")) v.push_back(row.get<FieldVector>());
  c.add("selfdual dual coefficient vectors", res.v == v);
  c.add("selfdual dual matrix", res.y.X == mat(fx, "Y") && res.y.T == spans_from(ex.at("hatT"), n));
  c.add("selfdual dual matrix differs from X", !(res.y.X == X));
  c.add("selfdual dual cycles", staggered_display(dual_cycle_states(res), res.y.X) == join_lines(ex.at("dual_cycles")));
  c.add("selfdual (X,X) violates the dual rank condition",
        !check_dual_rank_condition(res.x_by_end, res.x_by_end).ok() == ex.at("self_pair_fails_rank_condition").get<bool>());
  c.add("selfdual (X,Y) rank equivalence", verify_rank_equivalence(res).ok());
}

void example_f3(Checks& c, const SearchBudget& budget) {
  const Fixture& fx = fixture("f3_two_dual_matrices");
  const auto& ex = fx.expected();
  const FieldMatrix& H = *fx.code.parity_checks;
  const std::size_t n = H.cols();
  const LinearCode code = LinearCode::from_generator(fx.code.generators);
  const CharacteristicPair x{mat(fx, "X"), spans_from(ex.at("T"), n)};

  c.add("f3 normalized characteristic matrix count",
        count_characteristic_matrices(code, true) == ex.at("normalized_count").get<std::uint64_t>());
  bool normalized = check_characteristic_pair(code, x).ok();
  for (std::size_t l = 0; l < n; ++l) normalized = normalized && x.X.at(l, x.T[l].a) == 1;
  c.add("f3 printed X is a normalized characteristic pair", normalized);

  const DualCharResult res = dual_characteristic_pair(x, H);
  const SpanList hatT = spans_from(ex.at("hatT"), n);
  const FieldMatrix Y1 = mat(fx, "Y1");
  const FieldMatrix Y2 = mat(fx, "Y2");
  const FieldMatrix built = rows_in_span_order(res.y, hatT);
  c.add("f3 construction yields Y1", built == Y1 && !(built == Y2));

  const CharacteristicPair y1{Y1, hatT};
  const CharacteristicPair y2{Y2, hatT};
  const LinearCode dual = dual_code(code);
  c.add("f3 Y1 and Y2 are characteristic pairs of the dual",
        check_characteristic_pair(dual, y1).ok() && check_characteristic_pair(dual, y2).ok());
  c.add("f3 dual rank condition for (X,Y1) and (X,Y2)",
        check_dual_rank_condition(res.x_by_end, y1).ok() && check_dual_rank_condition(res.x_by_end, y2).ok());

  std::vector<std::size_t> K;
  for (auto r : from_json_list(ex.at("primal_rows"))) K.push_back(x.T[r].b);
  const DualSelection s1 = make_dual_selection(res.x_by_end, y1, K);
  const DualSelection s2 = make_dual_selection(res.x_by_end, y2, K);
  c.add("f3 dual rows of the selection", s1.K_hat == from_json_list(ex.at("dual_rows")));
  c.add("f3 Y1 selection gives the dual trellis", check_strong_duality(s1, H, budget).ok());
  c.add("f3 Y2 selection does not", !check_strong_duality(s2, H, budget).isomorphic);
  c.add("f3 Y1 and Y2 KV trellises differ",
        !find_isomorphism(product_trellis(s1.Y_sel, s1.S_hat).base, product_trellis(s2.Y_sel, s2.S_hat).base, budget));

  bool y2_fails = false;
  for (const auto& e : check_dual_rank_condition(res.x_by_end, y2).entries) {
    if (!e.x_full) continue;
    const DualSelection s = make_dual_selection(res.x_by_end, y2, e.K);
    y2_fails = y2_fails || !check_strong_duality(s, H, budget).ok() || !verify_bcjr_symmetry(s).ok();
  }
  c.add("f3 Y2 breaks duality for some full-rank selection", y2_fails);
}

void example_localdual_product(Checks& c) {
  const Fixture& fx = fixture("localdual_product");
  const auto& ex = fx.expected();
  const FieldMatrix& G = fx.code.generators;
  const ProductTrellis p = product_trellis(G, *fx.code.spans);
  const ComplexityProfile prof = complexity(p.base);
  c.add("product staggered state matrices", staggered_display(p.M, G) == join_lines(ex.at("staggered")));
  c.add("product profile", prof.scp == from_json_list(ex.at("scp")) && prof.ecp == from_json_list(ex.at("ecp")),
        profile_text(prof.scp) + " " + profile_text(prof.ecp));
  c.add("product not biproper", is_biproper(p.base) == ex.at("biproper").get<bool>());
  const LinearTrellis local = local_dual(p.base, standard_pairing(p.base));
  const ComplexityProfile dp = complexity(local);
  c.add("product local dual profile",
        dp.scp == from_json_list(ex.at("dual_scp")) && dp.ecp == from_json_list(ex.at("dual_ecp")),
        profile_text(dp.scp) + " " + profile_text(dp.ecp));
  compare_local_dual(c, "product local dual", local, ex.at("local_dual_standard"));
  c.add("product local dual not reduced", is_reduced(local) == ex.at("dual_reduced").get<bool>());
}

void example_bcjr_localdual(Checks& c, const SearchBudget& budget) {
  const Fixture& fx = fixture("bcjr_localdual");
  const auto& ex = fx.expected();
  const FieldMatrix& G = fx.code.generators;
  const FieldMatrix& H = *fx.code.parity_checks;
  const SpanList& S = *fx.code.spans;
  const std::size_t n = G.cols();
  const LinearCode code = LinearCode::from_generator(G);

  const SpanList cs = characteristic_spans(code);
  bool spans_ok = true;
  for (const auto& s : spans_from(ex.at("characteristic"), n)) spans_ok = spans_ok && contains_span(cs, s);
  for (const auto& s : spans_from(ex.at("not_characteristic"), n)) spans_ok = spans_ok && !contains_span(cs, s);
  const auto w = ex.at("witness_span");
  spans_ok = spans_ok && !codewords_with_span(code, Span(w.at(0), w.at(1), n), false).empty();
  c.add("localdual characteristic spans", spans_ok, to_string(cs));

  const BcjrTrellis t = bcjr_trellis_from_spans(G, H, S);
  const ComplexityProfile prof = complexity(t.base);
  c.add("localdual BCJR profile",
        prof.scp == from_json_list(ex.at("scp")) && prof.ecp == from_json_list(ex.at("ecp")) &&
            complexity(product_trellis(G, S).base).scp == prof.scp,
        profile_text(prof.scp) + " " + profile_text(prof.ecp));
  c.add("localdual displacement", t.D == mat(fx, "displacement", H.rows()));
  const SpanList dual_spans = spans_from(ex.at("dual_spans"), n);
  c.add("localdual dual displacement is the transpose", bcjr_displacement(H, G, dual_spans) == t.D.transpose());
  const BcjrTrellis perp = bcjr_dual(t);
  const LinearTrellis local = local_dual(t.base);
  const auto ecp = from_json_list(ex.at("dual_ecp"));
  c.add("localdual dual profiles", complexity(perp.base).ecp == ecp && complexity(local).ecp == ecp);
  c.add("localdual BCJR dual equals the dual BCJR trellis", perp.base == bcjr_trellis_from_spans(H, G, dual_spans).base);
  c.add("localdual BCJR dual isomorphic to local dual", find_isomorphism(perp.base, local, budget).has_value());
  c.add("localdual BCJR dual isomorphic to dual product trellis",
        find_isomorphism(perp.base, product_trellis(H, dual_spans).base, budget).has_value());
}

void example_hamming(Checks& c, const SearchBudget& budget) {
  const Fixture& fx = fixture("hamming_8_4");
  const auto& ex = fx.expected();
  const std::size_t n = fx.code.generators.cols();
  const LinearCode code = LinearCode::from_generator(fx.code.generators);
  const EndSorted lex = sorted_by_end(characteristic_pair(code, TieBreak::LexFirst));
  c.add("hamming lexicographically first characteristic pair",
        lex.pair.X == mat(fx, "X") && lex.pair.T == spans_from(ex.at("T"), n), to_string(lex.pair.T));

  auto rank_of = [&](const SpanList& spans) {
    std::vector<std::size_t> idx;
    for (const auto& s : spans) idx.push_back(s.b);
    return rank(lex.pair.X.select_rows(idx));
  };
  const SpanList indep = spans_from(ex.at("independent_spans"), n);
  const SpanList dep = spans_from(ex.at("dependent_spans"), n);
  c.add("hamming (X,X) counterexample ranks", rank_of(indep) == 4 && rank_of(dep) == 3);
  std::vector<std::size_t> K;
  for (const auto& s : indep) K.push_back(s.b);
  const DualSelection sel = make_dual_selection(lex.pair, lex.pair, K);
  c.add("hamming complementary spans", sorted(sel.S_hat) == sorted(dep));
  c.add("hamming (X,X) fails the dual rank condition", !check_dual_rank_condition(lex.pair, lex.pair).ok());
  c.add("hamming constructed pair passes", kv_conjecture_suite(code, TieBreak::LexFirst, 1, budget).ok());
}

Json selection_to_json(const SelectionVerdict& s) {
  return Json{{"K", s.K},
              {"ok", s.ok()},
              {"ranks_match", s.duality.ranks_match},
              {"states_equal", s.duality.states_equal},
              {"transitions_equal", s.duality.transitions_equal},
              {"isomorphic", s.duality.isomorphic},
              {"scp_equal", s.duality.scp_equal},
              {"displacement_symmetric", s.symmetry.displacement_equal},
              {"states_symmetric", s.symmetry.states_equal}};
}

std::string code_label(const LinearCode& c) {
  return "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "]_" +
         std::to_string(c.field().modulus());
}

// Intersection of all row spaces.
FieldMatrix common_states(const std::vector<FieldMatrix>& N) {
  FieldMatrix acc = row_basis(N.front());
  for (std::size_t j = 1; j < N.size(); ++j) acc = row_space_intersection(acc, N[j]);
  return acc;
}

void properties_for(Checks& c, const LinearCode& code, const std::string& label) {
  const auto& f = code.field();
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();

  // Shortest-span containment against every codeword.
  bool shortest = true;
  if (saturating_power(f.modulus(), k) <= (std::uint64_t{1} << 16)) {
    const SpanList by_start = characteristic_spans(code);
    for (const auto& w : enumerate_codewords(code, std::uint64_t{1} << 16)) {
      if (is_zero_vector(w)) continue;
      for (const auto& s : spans_of_vector(w))
        if (by_start[s.a].length() > s.length()) shortest = false;
    }
  }
  c.add(label + " shortest spans", shortest);

  const SpanList T = characteristic_spans(code);
  SpanList rev;
  for (const auto& s : T) rev.push_back(s.reversed());
  c.add(label + " dual spans are reversed", sorted(characteristic_spans(dual_code(code))) == sorted(rev));
  c.add(label + " greedy by start and by end agree", sorted(characteristic_spans_by_end(code)) == sorted(T));
  bool cover = true;
  for (std::size_t j = 0; j < n; ++j)
    cover = cover && std::count_if(T.begin(), T.end(), [&](const Span& s) { return s.contains(j); }) ==
                         static_cast<std::ptrdiff_t>(n - k);
  c.add(label + " coverage", cover);
  bool shift_ok = true;
  for (std::size_t a = 1; a < n; ++a) {
    SpanList moved;
    for (const auto& s : T) moved.push_back(s.shifted_left(a));
    shift_ok = shift_ok && sorted(characteristic_spans(cyclic_shift(code, a))) == sorted(moved);
  }
  c.add(label + " shift equivariance", shift_ok);

  for (TieBreak tb : {TieBreak::LexFirst, TieBreak::Normalized}) {
    const CharacteristicPair x = characteristic_pair(code, tb);
    const FieldMatrix& H = code.parity_check();
    bool hn = true;
    bool trivial = true;
    bool labels = true;
    for (const auto& sel : all_selections(n, k)) {
      if (rank(x.X.select_rows(sel)) != k) continue;
      const BcjrTrellis t = kv_trellis(x, H, sel);
      for (std::size_t j = 0; j < n; ++j) {
        const FieldMatrix Hj = FieldMatrix::row_vector(f, H.column(j));
        std::optional<std::size_t> ends;
        for (std::size_t l = 0; l < k; ++l)
          if (x.T[sel[l]].b == j) ends = l;
        if (ends) {
          const Residue g = t.G.at(*ends, j);
          FieldVector expect = t.N[j].row_copy(*ends);
          for (auto& e : expect) e = f.mul(f.neg(f.inv(g)), e);
          hn = hn && expect == H.column(j);
        } else {
          hn = hn && !row_space_contains(t.N[j], Hj);
        }
      }
      trivial = trivial && common_states(t.N).rows() == 0;
      labels = labels && edge_label_code(t.base) == code;
    }
    const std::string tag = label + " " + tie_break_name(tb);
    c.add(tag + " parity columns against state spaces", hn);
    c.add(tag + " trivial common state space", trivial);
    c.add(tag + " label code", labels);
  }
}

}  // namespace

std::string tie_break_name(TieBreak t) { return t == TieBreak::LexFirst ? "lex" : "normalized"; }

std::vector<LinearCode> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_length) {
  std::mt19937_64 rng(seed);
  std::vector<LinearCode> out;
  const std::size_t top = std::max<std::size_t>(3, max_length);
  while (out.size() < count) {
    const PrimeField f(out.size() % 2 == 0 ? 2 : 3);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, top)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
    out.push_back(random_code(f, n, k, rng));
  }
  return out;
}

Json kv_report_to_json(const KvConjectureReport& rep) {
  Json sels = Json::array();
  for (const auto& s : rep.selections) sels.push_back(selection_to_json(s));
  Json viol = Json::array();
  for (const auto& v : rep.ranks.violations) viol.push_back(v);
  return Json{{"ok", rep.ok()},
              {"dual_pair_valid", rep.dual_pair_valid},
              {"spans_reversed", rep.spans_reversed},
              {"selections_checked", rep.ranks.entries.size()},
              {"full_rank_selections", rep.selections.size()},
              {"rank_violations", std::move(viol)},
              {"selections", std::move(sels)}};
}

SuiteResult run_worked_examples(const SuiteOptions& opts) {
  Checks c;
  c.guard("bcjr-example-a", [&] { example_bcjr_a(c); });
  c.guard("selfdual-4-2", [&] { example_selfdual(c, opts.budget); });
  c.guard("f3-two-dual-matrices", [&] { example_f3(c, opts.budget); });
  c.guard("localdual-product", [&] { example_localdual_product(c); });
  c.guard("bcjr-localdual", [&] { example_bcjr_localdual(c, opts.budget); });
  c.guard("hamming-8-4", [&] { example_hamming(c, opts.budget); });
  const bool ok = c.ok();
  return {"paper-examples", ok, Json{{"suite", "paper-examples"}, {"ok", ok}, {"checks", c.take()}}};
}

SuiteResult run_kv_conjecture(const SuiteOptions& opts, const std::optional<LinearCode>& code) {
  std::vector<std::pair<std::string, LinearCode>> codes;
  if (code) {
    codes.emplace_back("input", *code);
  } else {
    for (const auto& fx : fixture_corpus()) codes.emplace_back(fx.name, LinearCode::from_generator(fx.code.generators));
    std::size_t i = 0;
    for (auto& rc : random_corpus(opts.seed, opts.random_codes, opts.max_length))
      codes.emplace_back("random-" + std::to_string(i++) + " " + code_label(rc), std::move(rc));
  }
  Json runs = Json::array();
  bool ok = true;
  for (const auto& [name, c] : codes) {
    for (TieBreak tb : {TieBreak::LexFirst, TieBreak::Normalized}) {
      Json entry{{"code", name}, {"tie_break", tie_break_name(tb)}};
      try {
        const KvConjectureReport rep = kv_conjecture_suite(c, tb, opts.jobs, opts.budget);
        Json body = kv_report_to_json(rep);
        body.erase("selections");
        entry.update(body);
        ok = ok && rep.ok();
      } catch (const Error& e) {
        entry["ok"] = false;
        entry["error"] = std::string(e.what());
        ok = false;
      }
      runs.push_back(std::move(entry));
    }
  }
  return {"kv-conjecture", ok, Json{{"suite", "kv-conjecture"}, {"ok", ok}, {"seed", opts.seed}, {"runs", std::move(runs)}}};
}

SuiteResult run_properties(const SuiteOptions& opts) {
  Checks c;
  std::size_t i = 0;
  for (const auto& code : random_corpus(opts.seed, opts.random_codes, opts.max_length)) {
    const std::string label = "random-" + std::to_string(i++) + " " + code_label(code);
    c.guard(label, [&] { properties_for(c, code, label); });
  }
  c.guard("bcjr-example-a common state witness", [&] {
    const Fixture& fx = fixture("bcjr_example_a");
    const BcjrTrellis t = bcjr_trellis_from_spans(fx.code.generators, *fx.code.parity_checks, *fx.code.spans);
    const FieldMatrix common = common_states(t.N);
    const FieldMatrix w = matrix_from_json(common.field(), Json::array({fx.expected().at("kernel_witness")}), common.cols());
    c.add("bcjr-example-a common state witness", common.rows() > 0 && row_space_contains(common, w));
  });
  const bool ok = c.ok();
  return {"properties", ok, Json{{"suite", "properties"}, {"ok", ok}, {"seed", opts.seed}, {"checks", c.take()}}};
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& opts) {
  if (name == "paper-examples" || name == "examples") return run_worked_examples(opts);
  if (name == "kv-conjecture") return run_kv_conjecture(opts);
  if (name == "properties") return run_properties(opts);
  throw Error(ErrorCode::InvalidArgument, "unknown suite " + std::string(name));
}

}  // namespace tbt
