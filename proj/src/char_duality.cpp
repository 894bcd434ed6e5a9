#include "tbt/char_duality.hpp"

#include <algorithm>
#include <future>

#include "tbt/errors.hpp"

namespace tbt {

namespace {

[[noreturn]] void fail(const std::string& clause, std::size_t m) {
  throw Error(ErrorCode::VerificationFailed, clause + " fails for dual row " + std::to_string(m));
}

SpanList pick(const SpanList& spans, const std::vector<std::size_t>& idx) {
  SpanList out;
  for (auto i : idx) out.push_back(spans[i]);
  return out;
}

std::vector<std::size_t> require_subset(const std::vector<std::size_t>& K, std::size_t n, std::size_t k) {
  std::vector<std::size_t> sorted = K;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() != k || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      (!sorted.empty() && sorted.back() >= n))
    throw Error(ErrorCode::BadSize, "a dual selection needs " + std::to_string(k) + " distinct indices below " +
                                        std::to_string(n));
  return sorted;
}

}  // namespace

DualCharResult dual_characteristic_pair(const CharacteristicPair& x, const FieldMatrix& H) {
  const std::size_t n = x.X.cols();
  if (x.X.rows() != n || x.T.size() != n)
    throw Error(ErrorCode::InvalidCharacteristicPair, "a characteristic matrix has n rows and n spans");
  const LinearCode code = LinearCode::from_generator(x.X);
  if (!code.has_full_support() || !code.dual_has_full_support())
    throw Error(ErrorCode::SupportError, "code and dual code need full support");
  const CharacteristicCheck check = check_characteristic_pair(code, x);
  if (!check.ok()) throw Error(ErrorCode::InvalidCharacteristicPair, "input is not a characteristic pair");
  const std::size_t k = code.dimension();
  if (H.cols() != n) throw Error(ErrorCode::DimensionMismatch, "H has the wrong length");
  if (!x.X.multiply(H.transpose()).is_zero()) throw Error(ErrorCode::NotOrthogonal, "X H^T is not zero");
  if (H.rows() != n - k || rank(H) != n - k)
    throw Error(ErrorCode::RankDeficient, "H must have n - k independent rows");

  EndSorted es = sorted_by_end(x);
  const FieldMatrix& X = es.pair.X;
  const SpanList& T = es.pair.T;
  const auto& f = X.field();
  const BcjrTrellis full = bcjr_trellis_from_spans(X, H, T);

  std::vector<FieldVector> v(n);
  FieldMatrix Y(f, n, n);
  SpanList hatT;
  for (std::size_t m = 0; m < n; ++m) {
    const std::size_t am = T[m].a;
    const Span dual_span(m, am, n);
    const std::size_t next = (m + 1) % n;
    // X^m drops row m; N^m_j are the matching rows of N_j since the displacement is row-wise.
    try {
      FieldVector rhs = X.column(m);
      rhs.erase(rhs.begin() + static_cast<std::ptrdiff_t>(m));
      v[m] = solve_unique(full.N[next].without_row(m), rhs);
    } catch (const Error& e) {
      throw Error(ErrorCode::NoUniqueSolution,
                  "no unique dual coefficient vector for row " + std::to_string(m) + ": " + e.what());
    }
    const FieldVector c = vec_mat(v[m], H);
    for (std::size_t j = 0; j < n; ++j) Y.set(m, j, c[j]);
    hatT.push_back(dual_span);

    if (c[m] != 1 || !is_span_of(dual_span, c)) fail("span and normalization", m);
    const FieldVector zero(n - k, 0);
    for (std::size_t j = 0; j < n; ++j) {
      const FieldMatrix Nm = full.N[j].without_row(m);
      if (!dual_span.contains(j) && !is_zero_vector(mat_vec(Nm, v[m]))) fail("vanishing off the span", m);
      const FieldMatrix Nn = full.N[(j + 1) % n].without_row(m);
      const FieldVector& wj = dual_span.contains(j) ? v[m] : zero;
      const FieldVector& wn = dual_span.contains((j + 1) % n) ? v[m] : zero;
      FieldVector lhs = mat_vec(Nm, wj);
      const FieldVector rhs = mat_vec(Nn, wn);
      for (std::size_t r = 0, src = 0; r < n; ++r) {
        if (r == m) continue;
        lhs[src] = f.sub(f.add(lhs[src], f.mul(X.at(r, j), c[j])), rhs[src]);
        ++src;
      }
      if (!is_zero_vector(lhs)) fail("cycle identity", m);
    }
  }

  CharacteristicPair y{Y, hatT};
  const LinearCode dual = dual_code(code);
  if (!check_characteristic_pair(dual, y).ok())
    throw Error(ErrorCode::VerificationFailed, "constructed pair is not a characteristic pair of the dual code");
  return {std::move(es.pair), std::move(es.perm), H, full.N, std::move(v), std::move(y)};
}

std::vector<std::vector<std::size_t>> all_selections(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) return out;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

DualSelection make_dual_selection(const CharacteristicPair& x_by_end, const CharacteristicPair& y,
                                  const std::vector<std::size_t>& K) {
  const std::size_t n = x_by_end.X.cols();
  const std::size_t k = rank(x_by_end.X);
  const std::vector<std::size_t> sorted = require_subset(K, n, k);
  const SpanList S = pick(x_by_end.T, sorted);
  std::vector<std::size_t> K_hat;
  for (std::size_t m = 0; m < y.T.size(); ++m) {
    const bool reversed = std::any_of(S.begin(), S.end(), [&](const Span& s) { return s.reversed() == y.T[m]; });
    if (!reversed) K_hat.push_back(m);
  }
  if (K_hat.size() != n - k)
    throw Error(ErrorCode::BadSize, "dual pair leaves " + std::to_string(K_hat.size()) + " non-reversed spans");
  return {sorted, K_hat, x_by_end.X.select_rows(sorted), S, y.X.select_rows(K_hat), pick(y.T, K_hat)};
}

DualSelection dual_selection(const DualCharResult& res, const std::vector<std::size_t>& K) {
  return make_dual_selection(res.x_by_end, res.y, K);
}

RankEquivalenceReport verify_rank_equivalence(const DualCharResult& res) {
  const std::size_t n = res.x_by_end.X.cols();
  const std::size_t k = n - res.H.rows();
  const auto& f = res.H.field();
  RankEquivalenceReport rep;
  for (const auto& K : all_selections(n, k)) {
    const DualSelection sel = dual_selection(res, K);
    std::vector<FieldVector> vs;
    for (auto m : sel.K_hat) vs.push_back(res.v[m]);
    RankEntry e;
    e.K = K;
    e.x_full = rank(sel.X_sel) == k;
    e.v_independent = rank(FieldMatrix::from_vectors(f, vs, n - k)) == n - k;
    e.y_full = rank(sel.Y_sel) == n - k;
    if (!e.consistent()) rep.violations.push_back(K);
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

RankEquivalenceReport check_dual_rank_condition(const CharacteristicPair& x_by_end, const CharacteristicPair& y) {
  const std::size_t n = x_by_end.X.cols();
  const std::size_t k = rank(x_by_end.X);
  RankEquivalenceReport rep;
  for (const auto& K : all_selections(n, k)) {
    const DualSelection sel = make_dual_selection(x_by_end, y, K);
    RankEntry e;
    e.K = K;
    e.x_full = rank(sel.X_sel) == k;
    e.y_full = rank(sel.Y_sel) == n - k;
    e.v_independent = e.y_full;
    if (!e.consistent()) rep.violations.push_back(K);
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

DualKvPair dual_kv_pair(const DualCharResult& res, const DualSelection& sel, const SearchBudget& budget) {
  const std::size_t n = res.x_by_end.X.cols();
  const std::size_t r = res.H.rows();
  const auto& f = res.H.field();
  if (rank(sel.X_sel) != sel.X_sel.rows())
    throw Error(ErrorCode::RankDeficient, "primal rows of the selection are dependent");
  BcjrTrellis primal = bcjr_trellis_from_spans(sel.X_sel, res.H, sel.S);

  // Row t of P_j is v_m on the dual span of m = K_hat[t], zero elsewhere.
  std::vector<FieldMatrix> P;
  for (std::size_t j = 0; j < n; ++j) {
    FieldMatrix pj(f, sel.K_hat.size(), r);
    for (std::size_t t = 0; t < sel.K_hat.size(); ++t)
      if (sel.S_hat[t].contains(j))
        for (std::size_t c = 0; c < r; ++c) pj.set(t, c, res.v[sel.K_hat[t]][c]);
    P.push_back(std::move(pj));
  }
  LinearTrellis dual = staggered_trellis(sel.Y_sel, P);

  DualKvReport rep;
  rep.K = sel.K;
  rep.ranks_match = true;
  std::vector<FieldMatrix> gram;
  for (std::size_t j = 0; j < n; ++j) {
    gram.push_back(primal.N[j].multiply(P[j].transpose()));
    const std::size_t rn = rank(primal.N[j]);
    if (rn != rank(P[j]) || rn != rank(gram.back())) {
      rep.ranks_match = false;
      if (!rep.failing_section) rep.failing_section = j;
    }
  }
  if (rep.ranks_match) {
    const LinearTrellis local = local_dual(primal.base, spanning_pairing(primal.base, primal.N, P, gram));
    rep.states_equal = true;
    rep.transitions_equal = true;
    for (std::size_t j = 0; j < n; ++j) {
      const bool s = same_row_space(local.state_basis(j), dual.state_basis(j));
      const bool e = same_row_space(local.transitions(j), dual.transitions(j));
      rep.states_equal = rep.states_equal && s;
      rep.transitions_equal = rep.transitions_equal && e;
      if ((!s || !e) && !rep.failing_section) rep.failing_section = j;
    }
  }
  const ProductTrellis product = product_trellis(sel.Y_sel, sel.S_hat);
  rep.isomorphic = find_isomorphism(dual, product.base, budget).has_value();
  rep.scp_equal = complexity(primal.base).scp == complexity(product.base).scp;
  return {std::move(primal), std::move(P), std::move(dual), std::move(rep)};
}

DualKvPair require_dual_kv_pair(const DualCharResult& res, const DualSelection& sel, const SearchBudget& budget) {
  DualKvPair out = dual_kv_pair(res, sel, budget);
  const auto& rep = out.report;
  if (rep.ok()) return out;
  if (rep.failing_section)
    throw Error(ErrorCode::DualityFailed, "duality fails at section " + std::to_string(*rep.failing_section));
  throw Error(ErrorCode::DualityFailed, rep.isomorphic ? "state complexity profiles differ"
                                                       : "dual trellis is not isomorphic to the product trellis");
}

StrongDualityReport check_strong_duality(const DualSelection& sel, const FieldMatrix& H, const SearchBudget& budget) {
  if (rank(sel.X_sel) != sel.X_sel.rows())
    throw Error(ErrorCode::RankDeficient, "primal rows of the selection are dependent");
  const BcjrTrellis primal = bcjr_trellis_from_spans(sel.X_sel, H, sel.S);
  const LinearTrellis local = local_dual(primal.base);
  StrongDualityReport rep;
  if (rank(sel.Y_sel) != sel.Y_sel.rows()) return rep;
  const ProductTrellis product = product_trellis(sel.Y_sel, sel.S_hat);
  rep.isomorphic = find_isomorphism(local, product.base, budget).has_value();
  rep.scp_equal = complexity(primal.base).scp == complexity(product.base).scp;
  return rep;
}

SymmetryReport verify_bcjr_symmetry(const DualSelection& sel) {
  FieldMatrix D = bcjr_displacement(sel.X_sel, sel.Y_sel, sel.S);
  FieldMatrix Dp = bcjr_displacement(sel.Y_sel, sel.X_sel, sel.S_hat);
  const bool disp = Dp == D.transpose();
  const BcjrTrellis fwd = bcjr_trellis(sel.X_sel, sel.Y_sel, D);
  const BcjrTrellis back = bcjr_trellis(sel.Y_sel, sel.X_sel, Dp);
  bool states = true;
  for (std::size_t j = 0; j < fwd.N.size(); ++j) states = states && back.N[j] == fwd.N[j].transpose();
  return {disp, states, std::move(D), std::move(Dp)};
}

SymmetryReport require_bcjr_symmetry(const DualSelection& sel) {
  SymmetryReport rep = verify_bcjr_symmetry(sel);
  if (!rep.ok())
    throw Error(ErrorCode::SymmetryFailed, rep.displacement_equal ? "state matrices are not transposes"
                                                                  : "displacement is not the transpose");
  return rep;
}

bool KvConjectureReport::ok() const noexcept {
  if (!dual_pair_valid || !spans_reversed || !ranks.ok()) return false;
  return std::all_of(selections.begin(), selections.end(), [](const SelectionVerdict& s) { return s.ok(); });
}

KvConjectureReport kv_conjecture_suite(const LinearCode& code, TieBreak tie_break, std::size_t jobs,
                                       const SearchBudget& budget) {
  const CharacteristicPair x = characteristic_pair(code, tie_break);
  DualCharResult res = dual_characteristic_pair(x, code.parity_check());
  const LinearCode dual = dual_code(code);
  const bool pair_ok = check_characteristic_pair(dual, res.y).ok();
  SpanList expected = characteristic_spans(dual);
  SpanList got = res.y.T;
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  RankEquivalenceReport ranks = verify_rank_equivalence(res);

  std::vector<std::vector<std::size_t>> full;
  for (const auto& e : ranks.entries)
    if (e.x_full) full.push_back(e.K);

  auto run = [&](const std::vector<std::size_t>& K) {
    const DualSelection sel = dual_selection(res, K);
    return SelectionVerdict{K, dual_kv_pair(res, sel, budget).report, verify_bcjr_symmetry(sel)};
  };
  std::vector<SelectionVerdict> verdicts;
  const std::size_t workers = std::max<std::size_t>(1, std::min(jobs, full.size()));
  if (workers <= 1) {
    for (const auto& K : full) verdicts.push_back(run(K));
  } else {
    // Worker w handles indices w, w + workers, ...; results are gathered back in index order.
    std::vector<std::future<std::vector<SelectionVerdict>>> futures;
    for (std::size_t w = 0; w < workers; ++w)
      futures.push_back(std::async(std::launch::async, [&, w] {
        std::vector<SelectionVerdict> part;
        for (std::size_t i = w; i < full.size(); i += workers) part.push_back(run(full[i]));
        return part;
      }));
    std::vector<std::vector<SelectionVerdict>> parts;
    for (auto& fut : futures) parts.push_back(fut.get());
    for (std::size_t i = 0; i < full.size(); ++i) verdicts.push_back(std::move(parts[i % workers][i / workers]));
  }
  return {std::move(res), pair_ok, expected == got, std::move(ranks), std::move(verdicts)};
}

}  // namespace tbt
