#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tbt/build.hpp"
#include "tbt/trellis.hpp"

namespace tbt {

/// Dual state spaces and the bilinear forms pairing them with the primal ones.
/// At time i, gram[i](r, c) = <row r of the RREF basis of V_i, row c of dual_basis[i]>.
struct StatePairing {
  std::vector<std::size_t> dual_ambient;
  std::vector<FieldMatrix> dual_basis;
  std::vector<FieldMatrix> gram;
};

/// Dual states are coordinate vectors w.r.t. the RREF basis of V_i; the Gram matrix is I.
StatePairing default_pairing(const LinearTrellis& t);
/// V_i paired with itself through the dot product of the ambient space.
StatePairing standard_pairing(const LinearTrellis& t);
/// <alpha A_i, beta B_i> = alpha K_i beta^T, with V_i = im A_i and dual space im B_i.
StatePairing spanning_pairing(const LinearTrellis& t, const std::vector<FieldMatrix>& A,
                              const std::vector<FieldMatrix>& B, const std::vector<FieldMatrix>& K);
/// <alpha N_i, beta N_i^T> = alpha N_i beta^T; dual states are the states of the BCJR dual.
StatePairing bcjr_transpose_pairing(const BcjrTrellis& t);

/// Sign-inverted local dual: (x, b, y) is a dual edge iff <v,x> + a b - <w,y> = 0 for every edge
/// (v,a,w). The result is not reduced. Throws DegeneratePairing if some Gram matrix is singular.
LinearTrellis local_dual(const LinearTrellis& t, const StatePairing& pairing);
LinearTrellis local_dual(const LinearTrellis& t);

/// T_(H, G, D^T). Throws NotOrthogonal.
BcjrTrellis bcjr_dual(const BcjrTrellis& t);

struct SubtrellisReport {
  bool states_equal = false;   // V-hat of the BCJR dual equals the local dual state space
  bool contained = false;      // every BCJR-dual edge space lies in the local dual edge space
  std::vector<std::size_t> local_ecp;
  std::vector<std::size_t> bcjr_ecp;
  std::vector<std::size_t> gap;  // local_ecp - bcjr_ecp
  bool ok() const noexcept { return states_equal && contained; }
};

/// Local dual under the transpose pairing against the BCJR dual, section by section.
SubtrellisReport check_subtrellis_dual(const BcjrTrellis& t);

struct KvDualityReport {
  bool ecp_equal = false;
  bool isomorphic = false;
  bool witness_checked = false;
  std::optional<TrellisIsomorphism> witness;
  SubtrellisReport subtrellis;
  bool ok() const noexcept { return ecp_equal && isomorphic && witness_checked && subtrellis.ok(); }
};

/// Builds the KV trellis of the selection, its BCJR dual and its local dual, and compares them.
KvDualityReport verify_kv_duality(const CharacteristicPair& x, const FieldMatrix& H,
                                  const std::vector<std::size_t>& selection,
                                  const SearchBudget& budget = SearchBudget::from_environment());

}  // namespace tbt
