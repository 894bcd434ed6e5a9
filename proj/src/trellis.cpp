#include "tbt/trellis.hpp"

#include <cstdlib>
#include <sstream>

#include "tbt/errors.hpp"

namespace tbt {

namespace {

std::size_t next(std::size_t i, std::size_t n) { return (i + 1) % n; }

// Rows of S(T) restricted to the coordinates of section i: (v_i, c_i, v_{i+1}).
FieldMatrix section_projection(const LinearTrellis& t, const CycleLayout& layout, const FieldMatrix& s,
                               std::size_t i) {
  const std::size_t n = t.depth();
  const std::size_t j = next(i, n);
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < t.ambient(i); ++c) cols.push_back(layout.state_offset[i] + c);
  cols.push_back(layout.label_offset + i);
  for (std::size_t c = 0; c < t.ambient(j); ++c) cols.push_back(layout.state_offset[j] + c);
  return s.select_cols(cols);
}

FieldMatrix state_projection(const LinearTrellis& t, const CycleLayout& layout, const FieldMatrix& s,
                             std::size_t i) {
  return s.col_range(layout.state_offset[i], t.ambient(i));
}

// Vertex label: residues concatenated, dot-separated once they can exceed one digit.
std::string digits(std::span<const Residue> v, std::uint32_t p) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i && p > 10) s += '.';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

LinearTrellis::LinearTrellis(PrimeField field, std::vector<TrellisSection> sections)
    : field_(field), sections_(std::move(sections)) {
  const std::size_t n = sections_.size();
  if (n == 0) throw Error(ErrorCode::InvalidTrellis, "a trellis needs at least one section");
  for (std::size_t i = 0; i < n; ++i) {
    auto& sec = sections_[i];
    const auto& nxt = sections_[next(i, n)];
    const std::string where = "section " + std::to_string(i) + ": ";
    if (!(sec.state_basis.field() == field_) || !(sec.transitions.field() == field_))
      throw Error(ErrorCode::InvalidTrellis, where + "field mismatch");
    if (sec.ambient_out != nxt.ambient_in)
      throw Error(ErrorCode::InvalidTrellis, where + "outgoing ambient dimension differs from the next section");
    if (sec.state_basis.cols() != sec.ambient_in)
      throw Error(ErrorCode::InvalidTrellis, where + "state basis width differs from ambient dimension");
    if (sec.transitions.cols() != sec.ambient_in + 1 + sec.ambient_out)
      throw Error(ErrorCode::InvalidTrellis, where + "transition width must be ambient_in + 1 + ambient_out");
    sec.state_basis = row_basis(sec.state_basis);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& sec = sections_[i];
    const std::string where = "section " + std::to_string(i) + ": ";
    if (!row_space_contains(sec.state_basis, sec.edge_in()))
      throw Error(ErrorCode::InvalidTrellis, where + "an edge starts outside the state space");
    if (!row_space_contains(sections_[next(i, n)].state_basis, sec.edge_out()))
      throw Error(ErrorCode::InvalidTrellis, where + "an edge ends outside the next state space");
  }
}

ComplexityProfile complexity(const LinearTrellis& t) {
  ComplexityProfile p;
  for (const auto& sec : t.sections()) {
    p.scp.push_back(sec.state_basis.rows());
    p.ecp.push_back(rank(sec.transitions));
  }
  return p;
}

CycleLayout cycle_layout(const LinearTrellis& t) {
  CycleLayout layout;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < t.depth(); ++i) {
    layout.state_offset.push_back(offset);
    offset += t.ambient(i);
  }
  layout.label_offset = offset;
  layout.width = offset + t.depth();
  return layout;
}

FieldMatrix label_code(const LinearTrellis& t) {
  const auto& f = t.field();
  const std::size_t n = t.depth();
  const CycleLayout layout = cycle_layout(t);

  // Unknowns: one coefficient vector per section. Constraint block i (in coordinates of time i+1):
  // alpha_i * E_i[out] - alpha_{i+1} * E_{i+1}[in] = 0.
  std::vector<std::size_t> row_offset;
  std::size_t total_rows = 0;
  for (const auto& sec : t.sections()) {
    row_offset.push_back(total_rows);
    total_rows += sec.transitions.rows();
  }
  std::vector<std::size_t> constraint_offset;
  std::size_t total_constraints = 0;
  for (std::size_t i = 0; i < n; ++i) {
    constraint_offset.push_back(total_constraints);
    total_constraints += t.section(i).ambient_out;
  }

  FieldMatrix system(f, total_rows, total_constraints);
  FieldMatrix embed(f, total_rows, layout.width);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& sec = t.section(i);
    const std::size_t prev = (i + n - 1) % n;
    for (std::size_t r = 0; r < sec.transitions.rows(); ++r) {
      const std::size_t row = row_offset[i] + r;
      for (std::size_t c = 0; c < sec.ambient_out; ++c) {
        const std::size_t col = constraint_offset[i] + c;
        system.set(row, col, f.add(system.at(row, col), sec.transitions.at(r, sec.ambient_in + 1 + c)));
      }
      for (std::size_t c = 0; c < sec.ambient_in; ++c) {
        const std::size_t col = constraint_offset[prev] + c;
        system.set(row, col, f.sub(system.at(row, col), sec.transitions.at(r, c)));
        embed.set(row, layout.state_offset[i] + c, sec.transitions.at(r, c));
      }
      embed.set(row, layout.label_offset + i, sec.transitions.at(r, sec.ambient_in));
    }
  }
  const FieldMatrix coeffs = left_kernel(system);
  return row_basis(coeffs.multiply(embed));
}

LinearCode edge_label_code(const LinearTrellis& t) {
  const FieldMatrix s = label_code(t);
  return LinearCode::from_rows_allow_zero(s.col_range(cycle_layout(t).label_offset, t.depth()));
}

bool is_biproper(const LinearTrellis& t) {
  for (const auto& sec : t.sections()) {
    const FieldMatrix in = sec.edge_in();
    const FieldMatrix out = sec.edge_out();
    const FieldMatrix lab = sec.transitions.col_range(sec.ambient_in, 1);
    // (0,0,w) in E forces w = 0, and (v,0,0) in E forces v = 0.
    if (!left_kernel(hconcat({&in, &lab})).multiply(out).is_zero()) return false;
    if (!left_kernel(hconcat({&lab, &out})).multiply(in).is_zero()) return false;
  }
  return true;
}

bool is_one_to_one(const LinearTrellis& t) {
  const FieldMatrix s = label_code(t);
  return rank(s.col_range(cycle_layout(t).label_offset, t.depth())) == s.rows();
}

bool is_reduced(const LinearTrellis& t) {
  const FieldMatrix s = label_code(t);
  const CycleLayout layout = cycle_layout(t);
  for (std::size_t i = 0; i < t.depth(); ++i) {
    if (rank(state_projection(t, layout, s, i)) != t.state_basis(i).rows()) return false;
    if (rank(section_projection(t, layout, s, i)) != rank(t.transitions(i))) return false;
  }
  return true;
}

LinearTrellis reduce(const LinearTrellis& t) {
  const FieldMatrix s = label_code(t);
  const CycleLayout layout = cycle_layout(t);
  std::vector<TrellisSection> sections;
  for (std::size_t i = 0; i < t.depth(); ++i) {
    const auto& sec = t.section(i);
    sections.push_back({sec.ambient_in, sec.ambient_out, row_basis(state_projection(t, layout, s, i)),
                        row_basis(section_projection(t, layout, s, i))});
  }
  return LinearTrellis(t.field(), std::move(sections));
}

SearchBudget SearchBudget::from_environment() {
  SearchBudget b;
  if (const char* env = std::getenv("TRELLIS_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) b.max_candidates = b.max_enumeration = v;
  }
  return b;
}

namespace {

bool maps_invertible(const std::vector<FieldMatrix>& maps) {
  for (const auto& a : maps)
    if (rank(a) != a.rows()) return false;
  return true;
}

// Linear system in the entries of all A_i expressing E_i -> E'_i under (A_i, A_{i+1}).
struct EdgeSystem {
  FieldMatrix matrix;
  FieldVector rhs;
  std::vector<std::size_t> offset;  // first unknown of A_i
};

EdgeSystem edge_system(const LinearTrellis& t1, const LinearTrellis& t2) {
  const auto& f = t1.field();
  const std::size_t n = t1.depth();
  EdgeSystem sys{FieldMatrix(f, 0, 0), {}, {}};
  std::size_t unknowns = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sys.offset.push_back(unknowns);
    const std::size_t s = t1.state_basis(i).rows();
    unknowns += s * s;
  }

  std::vector<FieldVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = next(i, n);
    const auto& sec1 = t1.section(i);
    const auto& sec2 = t2.section(i);
    const std::size_t si = t1.state_basis(i).rows();
    const std::size_t sj = t1.state_basis(j).rows();
    const FieldMatrix ann = left_kernel(sec2.transitions.transpose());
    const FieldMatrix in1 = sec1.edge_in();
    const FieldMatrix out1 = sec1.edge_out();
    for (std::size_t h = 0; h < ann.rows(); ++h) {
      const FieldVector hrow = ann.row_copy(h);
      const FieldVector h_in(hrow.begin(), hrow.begin() + sec2.ambient_in);
      const Residue h_lab = hrow[sec2.ambient_in];
      const FieldVector h_out(hrow.begin() + sec2.ambient_in + 1, hrow.end());
      const FieldVector u = mat_vec(t2.state_basis(i), h_in);   // B'_i h_in^T
      const FieldVector w = mat_vec(t2.state_basis(j), h_out);  // B'_{i+1} h_out^T
      for (std::size_t e = 0; e < sec1.transitions.rows(); ++e) {
        const FieldVector alpha = *solve_left(t1.state_basis(i), in1.row_copy(e));
        const FieldVector beta = *solve_left(t1.state_basis(j), out1.row_copy(e));
        FieldVector row(unknowns + 1, 0);
        for (std::size_t r = 0; r < si; ++r)
          for (std::size_t c = 0; c < si; ++c) {
            auto& x = row[sys.offset[i] + r * si + c];
            x = f.add(x, f.mul(alpha[r], u[c]));
          }
        for (std::size_t r = 0; r < sj; ++r)
          for (std::size_t c = 0; c < sj; ++c) {
            auto& x = row[sys.offset[j] + r * sj + c];
            x = f.add(x, f.mul(beta[r], w[c]));
          }
        row[unknowns] = f.neg(f.mul(sec1.transitions.at(e, sec1.ambient_in), h_lab));
        rows.push_back(std::move(row));
      }
    }
  }
  FieldMatrix full = FieldMatrix::from_vectors(f, rows, unknowns + 1);
  sys.matrix = full.col_range(0, unknowns);
  sys.rhs = full.column(unknowns);
  return sys;
}

std::vector<FieldMatrix> unpack(const LinearTrellis& t, const EdgeSystem& sys, const FieldVector& x) {
  std::vector<FieldMatrix> maps;
  for (std::size_t i = 0; i < t.depth(); ++i) {
    const std::size_t s = t.state_basis(i).rows();
    FieldMatrix a(t.field(), s, s);
    for (std::size_t r = 0; r < s; ++r)
      for (std::size_t c = 0; c < s; ++c) a.set(r, c, x[sys.offset[i] + r * s + c]);
    maps.push_back(std::move(a));
  }
  return maps;
}

}  // namespace

std::optional<TrellisIsomorphism> find_isomorphism(const LinearTrellis& t1, const LinearTrellis& t2,
                                                   const SearchBudget& budget) {
  if (!(t1.field() == t2.field()) || t1.depth() != t2.depth()) return std::nullopt;
  if (!(complexity(t1) == complexity(t2))) return std::nullopt;
  const EdgeSystem sys = edge_system(t1, t2);
  const auto particular = solve_any(sys.matrix, sys.rhs);
  if (!particular) return std::nullopt;
  // Right kernel of the system: the homogeneous solutions.
  const FieldMatrix kernel = left_kernel(sys.matrix.transpose());

  std::uint64_t tried = 0;
  bool exhausted_budget = false;
  std::optional<TrellisIsomorphism> found;
  find_in_coset(kernel, *particular, [&](const FieldVector& x) {
    if (tried++ >= budget.max_candidates) {
      exhausted_budget = true;
      return true;
    }
    auto maps = unpack(t1, sys, x);
    if (!maps_invertible(maps)) return false;
    found = TrellisIsomorphism{std::move(maps)};
    return true;
  });
  if (found) return found;
  if (exhausted_budget)
    throw Error(ErrorCode::SearchBudgetExceeded,
                "isomorphism search exceeded " + std::to_string(budget.max_candidates) + " candidates");
  return std::nullopt;
}

bool check_isomorphism(const LinearTrellis& t1, const LinearTrellis& t2, const TrellisIsomorphism& iso) {
  const std::size_t n = t1.depth();
  if (n != t2.depth() || iso.maps.size() != n) return false;
  if (!(complexity(t1) == complexity(t2))) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = iso.maps[i];
    const std::size_t s = t1.state_basis(i).rows();
    if (a.rows() != s || a.cols() != s || rank(a) != s) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = next(i, n);
    const auto& sec = t1.section(i);
    // Image of every generator of E_i, written in the second trellis' ambient coordinates.
    const FieldMatrix in_img = [&] {
      FieldMatrix m(t1.field(), sec.transitions.rows(), t2.ambient(i));
      for (std::size_t e = 0; e < sec.transitions.rows(); ++e) {
        const FieldVector alpha = *solve_left(t1.state_basis(i), sec.edge_in().row_copy(e));
        const FieldVector img = vec_mat(vec_mat(alpha, iso.maps[i]), t2.state_basis(i));
        for (std::size_t c = 0; c < img.size(); ++c) m.set(e, c, img[c]);
      }
      return m;
    }();
    FieldMatrix out_img(t1.field(), sec.transitions.rows(), t2.ambient(j));
    for (std::size_t e = 0; e < sec.transitions.rows(); ++e) {
      const FieldVector beta = *solve_left(t1.state_basis(j), sec.edge_out().row_copy(e));
      const FieldVector img = vec_mat(vec_mat(beta, iso.maps[j]), t2.state_basis(j));
      for (std::size_t c = 0; c < img.size(); ++c) out_img.set(e, c, img[c]);
    }
    const FieldMatrix lab = sec.transitions.col_range(sec.ambient_in, 1);
    const FieldMatrix image = hconcat({&in_img, &lab, &out_img});
    if (!row_space_contains(t2.transitions(i), image)) return false;
    if (rank(image) != rank(t2.transitions(i))) return false;
  }
  return true;
}

std::string export_dot(const LinearTrellis& t, std::uint64_t max_elements) {
  const std::uint64_t q = t.field().modulus();
  const std::size_t n = t.depth();
  const ComplexityProfile prof = complexity(t);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t vertices = saturating_power(q, prof.scp[i]);
    const std::uint64_t edges = saturating_power(q, prof.ecp[i]);
    if (vertices > max_elements || edges > max_elements) total = max_elements + 1;
    else total += vertices + edges;
    if (total > max_elements)
      throw Error(ErrorCode::TooLarge, "trellis graph is too large to export");
  }

  std::ostringstream out;
  out << "digraph trellis {\n  rankdir=LR;\n  node [shape=circle, label=\"\", width=0.15];\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "  subgraph time" << i << " {\n    rank=same;\n";
    for_each_combination(t.state_basis(i), [&](const FieldVector& v, const FieldVector&) {
      out << "    \"t" << i << '_' << digits(v, t.field().modulus()) << "\";\n";
    });
    out << "  }\n";
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& sec = t.section(i);
    const std::size_t j = next(i, n);
    for_each_combination(row_basis(sec.transitions), [&](const FieldVector& e, const FieldVector&) {
      const std::span<const Residue> all(e);
      const Residue label = e[sec.ambient_in];
      out << "  \"t" << i << '_' << digits(all.subspan(0, sec.ambient_in), t.field().modulus()) << "\" -> \"t" << j << '_'
          << digits(all.subspan(sec.ambient_in + 1, sec.ambient_out), t.field().modulus()) << "\" [label=\"" << label
          << "\", style=" << (label != 0 ? "solid" : "dashed") << "];\n";
    });
  }
  out << "}\n";
  return out.str();
}

}  // namespace tbt
