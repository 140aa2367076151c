#include "quiverhh/quotient.hpp"

#include <algorithm>

namespace quiverhh {

QuotientAlgebra QuotientAlgebra::build(const BoundQuiverPresentation& pres,
                                       int max_degree) {
  QuotientAlgebra a;
  a.pres_ = pres;
  a.gb_ = complete(pres, max_degree);

  int cert = *a.gb_.finite_dim_certificate();
  auto levels = a.gb_.irreducible_levels(cert);
  for (const auto& level : levels)
    for (const Path& p : level) a.basis_.push_back(p);
  std::sort(a.basis_.begin(), a.basis_.end());
  for (std::size_t i = 0; i < a.basis_.size(); ++i)
    a.basis_lookup_[a.basis_[i]] = static_cast<int>(i);

  a.radical_pos_.assign(a.basis_.size(), -1);
  a.stationary_.assign(pres.quiver.num_vertices(), -1);
  for (std::size_t i = 0; i < a.basis_.size(); ++i) {
    if (a.basis_[i].is_stationary()) {
      a.stationary_[a.basis_[i].source()] = static_cast<int>(i);
    } else {
      a.radical_pos_[i] = static_cast<int>(a.radical_.size());
      a.radical_.push_back(static_cast<int>(i));
    }
  }

  // structure constants
  const std::size_t n = a.basis_.size();
  a.products_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto pq = compose(a.basis_[i], a.basis_[j]);
      if (!pq) continue;
      Vec c = a.coords(PathVector::of_path(pres.field, *pq));
      SparseVec& out = a.products_[i * n + j];
      for (std::size_t k = 0; k < n; ++k)
        if (!c[k].is_zero()) out.emplace_back(static_cast<int>(k), c[k]);
    }
  return a;
}

int QuotientAlgebra::basis_index(const Path& p) const {
  auto it = basis_lookup_.find(p);
  return it == basis_lookup_.end() ? -1 : it->second;
}

Vec QuotientAlgebra::coords(const PathVector& x) const {
  PathVector nf = normal_form(x, gb_).normal_form;
  Vec v(basis_.size(), Scalar::zero(pres_.field));
  for (const auto& [p, c] : nf.terms()) {
    auto it = basis_lookup_.find(p);
    if (it == basis_lookup_.end())
      throw InvariantViolation("normal form outside basis: " +
                               p.str(pres_.quiver));
    v[it->second] = c;
  }
  return v;
}

PathVector QuotientAlgebra::from_coords(const Vec& v) const {
  PathVector x(pres_.field);
  for (std::size_t i = 0; i < v.size(); ++i) x.add_term(basis_[i], v[i]);
  return x;
}

std::string QuotientAlgebra::coords_str(const Vec& v) const {
  return from_coords(v).str(pres_.quiver);
}

Vec QuotientAlgebra::multiply(const Vec& a, const Vec& b) const {
  const std::size_t n = basis_.size();
  Vec out(n, Scalar::zero(pres_.field));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      for (const auto& [k, c] : products_[i * n + j])
        out[k] += a[i] * b[j] * c;
    }
  }
  return out;
}

int QuotientAlgebra::dim_pair(VertexId x, VertexId y) const {
  int d = 0;
  for (const Path& p : basis_)
    if (p.source() == x && p.target() == y) ++d;
  return d;
}

IdealDims ideal_dims(const QuotientAlgebra& algebra) {
  const BoundQuiverPresentation& pres = algebra.presentation();
  if (!algebra.groebner().finite_dim_certificate())
    throw Error("ideal_dims requires a finiteness certificate");
  int d = *algebra.groebner().finite_dim_certificate();
  // With length-homogeneous relations the ideal is graded and the span at
  // the certificate degree is the exact truncated slice; mixed-length
  // relations may need membership witnesses of higher degree.
  bool homogeneous = true;
  for (const PathVector& r : pres.relations) {
    std::size_t len = r.support().front().length();
    for (const Path& p : r.support())
      if (p.length() != len) homogeneous = false;
  }
  if (!homogeneous) d = algebra.groebner().completion_degree();
  TruncatedIdealSpan span(pres.quiver, pres.field, pres.relations, d);

  IdealDims out;
  out.truncation = d;
  for (const Vertex& vx : pres.quiver.vertices())
    for (const Vertex& vy : pres.quiver.vertices()) {
      int paths = static_cast<int>(span.pair_paths(vx.id, vy.id).size());
      if (paths == 0) continue;
      int span_ideal = static_cast<int>(span.ideal_span(vx.id, vy.id).dim());
      int gb_algebra = algebra.dim_pair(vx.id, vy.id);
      int gb_ideal = paths - gb_algebra;
      int span_algebra = paths - span_ideal;
      if (gb_ideal != span_ideal || gb_algebra != span_algebra)
        throw OracleMismatch(
            "ideal dimension mismatch at (" + vx.label + ", " + vy.label +
            "): groebner says dim I = " + std::to_string(gb_ideal) +
            ", truncated span says " + std::to_string(span_ideal));
      out.entries.push_back(
          IdealDims::Entry{vx.id, vy.id, paths, gb_ideal, gb_algebra});
    }
  return out;
}

}  // namespace quiverhh
