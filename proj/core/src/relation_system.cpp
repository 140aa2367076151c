#include "quiverhh/relation_system.hpp"

#include <algorithm>

namespace quiverhh {

namespace {

int span_truncation(const QuotientAlgebra& a) {
  bool homogeneous = true;
  for (const PathVector& r : a.presentation().relations) {
    std::size_t len = r.support().front().length();
    for (const Path& p : r.support())
      if (p.length() != len) homogeneous = false;
  }
  return homogeneous ? *a.groebner().finite_dim_certificate()
                     : a.groebner().completion_degree();
}

}  // namespace

RelationSystem minimal_relation_system(const QuotientAlgebra& algebra) {
  const BoundQuiverPresentation& pres = algebra.presentation();
  int d = span_truncation(algebra);
  TruncatedIdealSpan span(pres.quiver, pres.field, pres.relations, d);
  std::vector<Circuit> circuits = ideal_circuits(span);

  RelationSystem out;
  for (const Vertex& vx : pres.quiver.vertices())
    for (const Vertex& vy : pres.quiver.vertices()) {
      const Subspace& ideal = span.ideal_span(vx.id, vy.id);
      const Subspace& deep = span.arrow_ideal_span(vx.id, vy.id);
      std::size_t want = ideal.dim() - deep.dim();
      if (want == 0) continue;
      Subspace current = deep;
      std::size_t got = 0;
      for (const Circuit& c : circuits) {
        if (c.x != vx.id || c.y != vy.id) continue;
        Vec coords = span.coordinates(c.element);
        if (current.contains(coords)) continue;
        Matrix one(pres.field, 1, coords.size());
        one.set_row(0, coords);
        current = subspace_sum(current, Subspace::from_rows(one));
        out.relations.push_back(RelationSystem::Entry{c.element, true});
        if (++got == want) break;
      }
      if (got != want)
        throw InvariantViolation(
            "could not lift a strongly minimal generating set at (" +
            vx.label + ", " + vy.label + "): need " + std::to_string(want) +
            ", found " + std::to_string(got));
    }
  return out;
}

StrongMinimality strongly_minimal_check(const PathVector& r,
                                        const QuotientAlgebra& algebra) {
  if (r.is_zero() || !r.endpoint_homogeneous())
    throw SemanticError(
        "strong minimality is defined for nonzero endpoint-homogeneous "
        "relations");
  {
    PathVector nf = normal_form(r, algebra.groebner()).normal_form;
    if (!nf.is_zero())
      throw SemanticError("relation is not an ideal member: " +
                          r.str(algebra.quiver()));
  }
  const BoundQuiverPresentation& pres = algebra.presentation();
  int d = std::max<int>(span_truncation(algebra),
                        static_cast<int>(r.degree()));
  TruncatedIdealSpan span(pres.quiver, pres.field, pres.relations, d);
  const Subspace& ideal = span.ideal_span(r.source(), r.target());
  const std::vector<Path>& paths = span.pair_paths(r.source(), r.target());

  std::vector<std::size_t> support;
  for (const Path& p : r.support()) {
    auto it = std::find(paths.begin(), paths.end(), p);
    if (it == paths.end())
      throw Error("support path beyond truncation: " + p.str(pres.quiver));
    support.push_back(static_cast<std::size_t>(it - paths.begin()));
  }
  const std::size_t m = support.size();

  // subsets of the support, smallest first
  std::vector<std::size_t> subset;
  for (std::size_t size = 1; size < m; ++size) {
    subset.assign(size, 0);
    for (std::size_t i = 0; i < size; ++i) subset[i] = i;
    for (;;) {
      std::vector<char> chosen(paths.size(), 0);
      for (std::size_t i : subset) chosen[support[i]] = 1;
      std::vector<std::size_t> outside;
      for (std::size_t j = 0; j < paths.size(); ++j)
        if (!chosen[j]) outside.push_back(j);
      Matrix msys(pres.field, outside.size(), ideal.dim());
      for (std::size_t row = 0; row < outside.size(); ++row)
        for (std::size_t k = 0; k < ideal.dim(); ++k)
          msys.at(row, k) = ideal.basis().at(k, outside[row]);
      Subspace ker = kernel(msys);
      if (ker.dim() > 0) {
        Vec lambda = ker.basis().row(0);
        PathVector witness(pres.field);
        for (std::size_t k = 0; k < ideal.dim(); ++k)
          for (std::size_t j = 0; j < paths.size(); ++j) {
            Scalar c = lambda[k] * ideal.basis().at(k, j);
            witness.add_term(paths[j], c);
          }
        // normalise leading support coefficient to 1
        Scalar lead = witness.terms().begin()->second;
        witness = witness * lead.inverse();
        StrongMinimality res;
        res.strongly_minimal = false;
        res.witness = witness;
        res.witness_support = witness.support();
        return res;
      }
      std::size_t i = size;
      while (i > 0 && subset[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t k = i; k < size; ++k) subset[k] = subset[k - 1] + 1;
    }
  }
  return StrongMinimality{true, {}, PathVector::zero(pres.field)};
}

}  // namespace quiverhh
