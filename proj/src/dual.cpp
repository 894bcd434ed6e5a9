#include "tbt/dual.hpp"

#include "tbt/errors.hpp"

namespace tbt {

StatePairing default_pairing(const LinearTrellis& t) {
  StatePairing p;
  for (std::size_t i = 0; i < t.depth(); ++i) {
    const std::size_t s = t.state_basis(i).rows();
    p.dual_ambient.push_back(s);
    p.dual_basis.push_back(FieldMatrix::identity(t.field(), s));
    p.gram.push_back(FieldMatrix::identity(t.field(), s));
  }
  return p;
}

StatePairing standard_pairing(const LinearTrellis& t) {
  StatePairing p;
  for (std::size_t i = 0; i < t.depth(); ++i) {
    const FieldMatrix& b = t.state_basis(i);
    p.dual_ambient.push_back(t.ambient(i));
    p.dual_basis.push_back(b);
    p.gram.push_back(b.multiply(b.transpose()));
  }
  return p;
}

StatePairing spanning_pairing(const LinearTrellis& t, const std::vector<FieldMatrix>& A,
                              const std::vector<FieldMatrix>& B, const std::vector<FieldMatrix>& K) {
  const std::size_t n = t.depth();
  if (A.size() != n || B.size() != n || K.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "pairing needs one matrix triple per time");
  StatePairing p;
  for (std::size_t i = 0; i < n; ++i) {
    const FieldMatrix& primal = t.state_basis(i);
    if (!same_row_space(A[i], primal))
      throw Error(ErrorCode::DegeneratePairing, "pairing matrix does not span the state space at " + std::to_string(i));
    const Echelon dual = rref(B[i]);
    // Coordinates of the canonical primal and dual bases w.r.t. the spanning rows of A and B.
    FieldMatrix gam(t.field(), primal.rows(), A[i].rows());
    for (std::size_t r = 0; r < primal.rows(); ++r) {
      const FieldVector g = *solve_left(A[i], primal.row_copy(r));
      for (std::size_t c = 0; c < g.size(); ++c) gam.set(r, c, g[c]);
    }
    FieldMatrix del(t.field(), dual.reduced.rows(), B[i].rows());
    for (std::size_t r = 0; r < dual.reduced.rows(); ++r) {
      const FieldVector d = *solve_left(B[i], dual.reduced.row_copy(r));
      for (std::size_t c = 0; c < d.size(); ++c) del.set(r, c, d[c]);
    }
    p.dual_ambient.push_back(B[i].cols());
    p.dual_basis.push_back(dual.reduced);
    p.gram.push_back(gam.multiply(K[i]).multiply(del.transpose()));
  }
  return p;
}

StatePairing bcjr_transpose_pairing(const BcjrTrellis& t) {
  std::vector<FieldMatrix> transposed;
  for (const auto& m : t.N) transposed.push_back(m.transpose());
  return spanning_pairing(t.base, t.N, transposed, t.N);
}

LinearTrellis local_dual(const LinearTrellis& t, const StatePairing& pairing) {
  const auto& f = t.field();
  const std::size_t n = t.depth();
  if (pairing.gram.size() != n || pairing.dual_basis.size() != n || pairing.dual_ambient.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "pairing depth differs from the trellis depth");
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t s = t.state_basis(i).rows();
    const auto& g = pairing.gram[i];
    if (g.rows() != s || g.cols() != s || rank(g) != s || pairing.dual_basis[i].rows() != s ||
        rank(pairing.dual_basis[i]) != s)
      throw Error(ErrorCode::DegeneratePairing, "bilinear form is degenerate at time " + std::to_string(i));
  }

  std::vector<TrellisSection> sections;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const auto& sec = t.section(i);
    const std::size_t si = t.state_basis(i).rows();
    const std::size_t sj = t.state_basis(j).rows();
    const FieldMatrix in = sec.edge_in();
    const FieldMatrix out = sec.edge_out();
    // Row per primal edge generator: (alpha Gamma_i, a, -beta Gamma_{i+1}).
    FieldMatrix r(f, sec.transitions.rows(), si + 1 + sj);
    for (std::size_t e = 0; e < sec.transitions.rows(); ++e) {
      const FieldVector alpha = vec_mat(*solve_left(t.state_basis(i), in.row_copy(e)), pairing.gram[i]);
      const FieldVector beta = vec_mat(*solve_left(t.state_basis(j), out.row_copy(e)), pairing.gram[j]);
      for (std::size_t c = 0; c < si; ++c) r.set(e, c, alpha[c]);
      r.set(e, si, sec.transitions.at(e, sec.ambient_in));
      for (std::size_t c = 0; c < sj; ++c) r.set(e, si + 1 + c, f.neg(beta[c]));
    }
    const FieldMatrix coords = left_kernel(r.transpose());
    // Back to ambient dual coordinates through blockdiag(B-hat_i, 1, B-hat_{i+1}).
    const FieldMatrix x = coords.col_range(0, si).multiply(pairing.dual_basis[i]);
    const FieldMatrix lab = coords.col_range(si, 1);
    const FieldMatrix y = coords.col_range(si + 1, sj).multiply(pairing.dual_basis[j]);
    sections.push_back({pairing.dual_ambient[i], pairing.dual_ambient[j], pairing.dual_basis[i],
                        row_basis(hconcat({&x, &lab, &y}))});
  }
  return LinearTrellis(f, std::move(sections));
}

LinearTrellis local_dual(const LinearTrellis& t) { return local_dual(t, default_pairing(t)); }

BcjrTrellis bcjr_dual(const BcjrTrellis& t) { return bcjr_trellis(t.H, t.G, t.D.transpose()); }

SubtrellisReport check_subtrellis_dual(const BcjrTrellis& t) {
  SubtrellisReport rep;
  const LinearTrellis local = local_dual(t.base, bcjr_transpose_pairing(t));
  const BcjrTrellis perp = bcjr_dual(t);
  rep.states_equal = true;
  rep.contained = true;
  for (std::size_t i = 0; i < t.base.depth(); ++i) {
    rep.states_equal = rep.states_equal && same_row_space(local.state_basis(i), perp.base.state_basis(i));
    rep.contained = rep.contained && row_space_contains(local.transitions(i), perp.base.transitions(i));
    const std::size_t le = rank(local.transitions(i));
    const std::size_t be = rank(perp.base.transitions(i));
    rep.local_ecp.push_back(le);
    rep.bcjr_ecp.push_back(be);
    rep.gap.push_back(le >= be ? le - be : 0);
  }
  return rep;
}

KvDualityReport verify_kv_duality(const CharacteristicPair& x, const FieldMatrix& H,
                                  const std::vector<std::size_t>& selection, const SearchBudget& budget) {
  KvDualityReport rep;
  const BcjrTrellis t = kv_trellis(x, H, selection);
  const BcjrTrellis perp = bcjr_dual(t);
  const LinearTrellis local = local_dual(t.base);
  rep.ecp_equal = complexity(perp.base) == complexity(local);
  rep.witness = find_isomorphism(perp.base, local, budget);
  rep.isomorphic = rep.witness.has_value();
  rep.witness_checked = rep.witness && check_isomorphism(perp.base, local, *rep.witness);
  rep.subtrellis = check_subtrellis_dual(t);
  return rep;
}

}  // namespace tbt
