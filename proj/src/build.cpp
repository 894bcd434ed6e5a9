#include "tbt/build.hpp"

#include <algorithm>
#include <sstream>

#include "tbt/errors.hpp"

namespace tbt {

namespace {

void require_spans(const FieldMatrix& G, const SpanList& spans) {
  if (spans.size() != G.rows())
    throw Error(ErrorCode::InvalidSpan, "span list length differs from the number of rows");
  for (std::size_t l = 0; l < G.rows(); ++l) {
    if (G.is_zero_row(l)) throw Error(ErrorCode::ZeroRow, "row " + std::to_string(l) + " is zero");
    if (!is_span_of(spans[l], G.row(l)))
      throw Error(ErrorCode::InvalidSpan, spans[l].to_string() + " is not a span of row " + std::to_string(l));
  }
}

void require_orthogonal(const FieldMatrix& G, const FieldMatrix& H) {
  if (G.cols() != H.cols()) throw Error(ErrorCode::DimensionMismatch, "G and H have different lengths");
  if (!G.multiply(H.transpose()).is_zero()) throw Error(ErrorCode::NotOrthogonal, "G H^T is not zero");
}

}  // namespace

LinearTrellis staggered_trellis(const FieldMatrix& G, const std::vector<FieldMatrix>& states) {
  const std::size_t n = G.cols();
  if (states.size() != n) throw Error(ErrorCode::DimensionMismatch, "need one state matrix per time");
  for (const auto& s : states)
    if (s.rows() != G.rows()) throw Error(ErrorCode::DimensionMismatch, "state matrices must be row-aligned");
  std::vector<TrellisSection> sections;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s_in = states[i];
    const auto& s_out = states[(i + 1) % n];
    const FieldMatrix g = G.col_range(i, 1);
    sections.push_back({s_in.cols(), s_out.cols(), s_in, hconcat({&s_in, &g, &s_out})});
  }
  return LinearTrellis(G.field(), std::move(sections));
}

LinearTrellis elementary_trellis(const PrimeField& f, const FieldVector& c, const Span& s) {
  if (s.n != c.size() || !is_span_of(s, c))
    throw Error(ErrorCode::InvalidSpan, s.to_string() + " is not a span of " + vector_to_string(c));
  return product_trellis(FieldMatrix::row_vector(f, c), {s}).base;
}

ProductTrellis product_trellis(const FieldMatrix& G, const SpanList& spans) {
  require_spans(G, spans);
  const std::size_t n = G.cols();
  const std::size_t r = G.rows();
  std::vector<FieldMatrix> M;
  for (std::size_t j = 0; j < n; ++j) {
    FieldMatrix m(G.field(), r, r);
    for (std::size_t l = 0; l < r; ++l) m.set(l, l, spans[l].contains(j) ? 1 : 0);
    M.push_back(std::move(m));
  }
  LinearTrellis base = staggered_trellis(G, M);
  return {std::move(base), G, spans, std::move(M)};
}

FieldMatrix bcjr_displacement(const FieldMatrix& G, const FieldMatrix& H, const SpanList& spans) {
  require_orthogonal(G, H);
  require_spans(G, spans);
  const auto& f = G.field();
  const std::size_t n = G.cols();
  FieldMatrix D(f, G.rows(), H.rows());
  for (std::size_t l = 0; l < G.rows(); ++l)
    for (std::size_t j = spans[l].a; j < n; ++j) {
      const Residue g = G.at(l, j);
      if (g == 0) continue;
      for (std::size_t c = 0; c < H.rows(); ++c) D.set(l, c, f.add(D.at(l, c), f.mul(g, H.at(c, j))));
    }
  return D;
}

BcjrTrellis bcjr_trellis(const FieldMatrix& G, const FieldMatrix& H, const FieldMatrix& D) {
  require_orthogonal(G, H);
  if (D.rows() != G.rows() || D.cols() != H.rows())
    throw Error(ErrorCode::DimensionMismatch, "displacement must be rows(G) x rows(H)");
  const std::size_t n = G.cols();
  std::vector<FieldMatrix> N{D};
  for (std::size_t i = 1; i < n; ++i)
    N.push_back(N.back().plus(outer_product(G.field(), G.column(i - 1), H.column(i - 1))));
  LinearTrellis base = staggered_trellis(G, N);
  return {std::move(base), G, H, D, std::move(N), std::nullopt};
}

BcjrTrellis bcjr_trellis_from_spans(const FieldMatrix& G, const FieldMatrix& H, const SpanList& spans) {
  BcjrTrellis t = bcjr_trellis(G, H, bcjr_displacement(G, H, spans));
  t.spans = spans;
  return t;
}

BcjrTrellis kv_trellis(const CharacteristicPair& x, const FieldMatrix& H, const std::vector<std::size_t>& selection) {
  const std::size_t n = x.X.cols();
  const std::size_t k = rank(x.X);
  std::vector<std::size_t> sorted = selection;
  std::sort(sorted.begin(), sorted.end());
  if (selection.size() != k || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      (!sorted.empty() && sorted.back() >= x.X.rows()))
    throw Error(ErrorCode::BadSelectionSize,
                "a KV selection needs " + std::to_string(k) + " distinct row indices");
  const FieldMatrix G = x.X.select_rows(selection);
  if (rank(G) != k) throw Error(ErrorCode::RankDeficient, "selected characteristic rows are dependent");
  SpanList spans;
  for (auto l : selection) spans.push_back(x.T[l]);

  BcjrTrellis t = bcjr_trellis_from_spans(G, H, spans);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> live;
    for (std::size_t l = 0; l < k; ++l) {
      if (spans[l].contains(j)) live.push_back(l);
      else if (!t.N[j].is_zero_row(l))
        throw Error(ErrorCode::VerificationFailed,
                    "state row " + std::to_string(l) + " is nonzero off its span at time " + std::to_string(j));
    }
    if (rank(t.N[j].select_rows(live)) != live.size())
      throw Error(ErrorCode::VerificationFailed, "state rows at time " + std::to_string(j) + " are dependent");
  }
  if (!(complexity(t.base).scp == complexity(product_trellis(G, spans).base).scp))
    throw Error(ErrorCode::VerificationFailed, "KV trellis SCP differs from the product trellis");
  return t;
}

BcjrTrellis shift_trellis(const BcjrTrellis& t, std::size_t steps) {
  const std::size_t n = t.G.cols();
  const std::size_t s = steps % n;
  BcjrTrellis out = bcjr_trellis(cyclic_shift_columns(t.G, s), cyclic_shift_columns(t.H, s), t.N[s]);
  if (t.spans) {
    SpanList shifted;
    for (const auto& sp : *t.spans) shifted.push_back(sp.shifted_left(s));
    out.spans = std::move(shifted);
  }
  return out;
}

std::string staggered_display(const std::vector<FieldMatrix>& states, const FieldMatrix& G) {
  const std::size_t n = G.cols();
  const char* sep = G.field().modulus() > 10 ? "," : "";
  std::ostringstream out;
  auto block = [&](const FieldMatrix& m, std::size_t r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? sep : "") << m.at(r, c);
  };
  for (std::size_t r = 0; r < G.rows(); ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      block(states[i], r);
      out << '|' << G.at(r, i) << '|';
    }
    block(states[0], r);
    out << '\n';
  }
  return out.str();
}

}  // namespace tbt
