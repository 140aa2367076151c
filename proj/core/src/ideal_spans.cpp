#include "quiverhh/ideal_spans.hpp"

#include <algorithm>

#include "quiverhh/errors.hpp"

namespace quiverhh {

std::vector<Path> all_paths_up_to(const Quiver& q, int max_len) {
  std::vector<Path> out;
  std::vector<Path> level;
  for (const Vertex& v : q.vertices()) level.push_back(Path::stationary(v.id));
  out = level;
  for (int len = 1; len <= max_len && !level.empty(); ++len) {
    std::vector<Path> next;
    for (const Path& p : level)
      for (ArrowId a : q.arrows_from(p.target())) {
        std::vector<ArrowId> arrows = p.arrows();
        arrows.push_back(a);
        next.emplace_back(p.is_stationary() ? q.arrow(a).source : p.source(),
                          q.arrow(a).target, std::move(arrows));
      }
    level = next;
    out.insert(out.end(), next.begin(), next.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

TruncatedIdealSpan::TruncatedIdealSpan(const Quiver& quiver, const Field& field,
                                       const std::vector<PathVector>& gens,
                                       int degree)
    : quiver_(&quiver), field_(field), degree_(degree) {
  for (const Path& p : all_paths_up_to(quiver, degree)) {
    auto key = std::make_pair(p.source(), p.target());
    index_[key][p] = paths_[key].size();
    paths_[key].push_back(p);
  }

  // rows of u * r * v per endpoint pair, split by len(u) + len(v) >= 1
  std::map<std::pair<VertexId, VertexId>, std::vector<PathVector>> all_rows;
  std::map<std::pair<VertexId, VertexId>, std::vector<PathVector>> deep_rows;
  std::vector<Path> paths = all_paths_up_to(quiver, degree);
  for (const PathVector& r : gens) {
    if (r.is_zero()) continue;
    int rdeg = static_cast<int>(r.degree());
    for (const Path& u : paths) {
      if (u.target() != r.source()) continue;
      if (static_cast<int>(u.length()) + rdeg > degree) continue;
      PathVector ur = r.left_mul(u);
      for (const Path& v : paths) {
        if (v.source() != r.target()) continue;
        if (static_cast<int>(u.length() + v.length()) + rdeg > degree)
          continue;
        PathVector urv = ur.right_mul(v);
        if (urv.is_zero()) continue;
        auto key = std::make_pair(u.source(), v.target());
        all_rows[key].push_back(urv);
        if (u.length() + v.length() >= 1) deep_rows[key].push_back(urv);
      }
    }
  }

  auto build = [&](const std::map<std::pair<VertexId, VertexId>,
                                  std::vector<PathVector>>& rows,
                   std::map<std::pair<VertexId, VertexId>, Subspace>& out) {
    for (const Vertex& vx : quiver.vertices())
      for (const Vertex& vy : quiver.vertices()) {
        auto key = std::make_pair(vx.id, vy.id);
        const std::vector<Path>& coords = pair_paths(vx.id, vy.id);
        auto it = rows.find(key);
        if (it == rows.end()) {
          out.emplace(key, Subspace::zero(field_, coords.size()));
          continue;
        }
        const std::vector<PathVector>& vecs = it->second;
        Matrix m(field_, vecs.size(), coords.size());
        for (std::size_t i = 0; i < vecs.size(); ++i)
          for (const auto& [p, c] : vecs[i].terms())
            m.at(i, index_.at(key).at(p)) = c;
        out.emplace(key, Subspace::from_rows(m));
      }
  };
  build(all_rows, ideal_);
  build(deep_rows, arrow_ideal_);
}

const std::vector<Path>& TruncatedIdealSpan::pair_paths(VertexId x,
                                                        VertexId y) const {
  auto it = paths_.find({x, y});
  return it == paths_.end() ? empty_paths_ : it->second;
}

const Subspace& TruncatedIdealSpan::ideal_span(VertexId x, VertexId y) const {
  return ideal_.at({x, y});
}

const Subspace& TruncatedIdealSpan::arrow_ideal_span(VertexId x,
                                                     VertexId y) const {
  return arrow_ideal_.at({x, y});
}

Vec TruncatedIdealSpan::coordinates(const PathVector& v) const {
  if (v.is_zero()) throw Error("coordinates of zero vector need a pair");
  auto key = std::make_pair(v.source(), v.target());
  const std::vector<Path>& coords = pair_paths(key.first, key.second);
  Vec out(coords.size(), Scalar::zero(field_));
  for (const auto& [p, c] : v.terms()) {
    auto it = index_.at(key).find(p);
    if (it == index_.at(key).end())
      throw Error("path beyond truncation degree: " + p.str(*quiver_));
    out[it->second] = c;
  }
  return out;
}

PathVector TruncatedIdealSpan::from_coordinates(VertexId x, VertexId y,
                                                const Vec& c) const {
  const std::vector<Path>& coords = pair_paths(x, y);
  PathVector v(field_);
  for (std::size_t i = 0; i < c.size(); ++i) v.add_term(coords[i], c[i]);
  return v;
}

std::vector<Circuit> ideal_circuits(const TruncatedIdealSpan& span,
                                    std::size_t max_support_paths) {
  std::vector<Circuit> out;
  const Quiver& q = span.quiver();
  for (const Vertex& vx : q.vertices())
    for (const Vertex& vy : q.vertices()) {
      const Subspace& ideal = span.ideal_span(vx.id, vy.id);
      if (ideal.dim() == 0) continue;
      const std::vector<Path>& paths = span.pair_paths(vx.id, vy.id);
      const std::size_t n = paths.size();
      // only columns touched by the ideal can ever sit in a support
      std::vector<std::size_t> relevant;
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < ideal.dim(); ++k)
          if (!ideal.basis().at(k, j).is_zero()) {
            relevant.push_back(j);
            break;
          }
      }
      const std::size_t nr = relevant.size();
      if (nr > max_support_paths)
        throw Error("circuit enumeration cap exceeded: " + std::to_string(nr) +
                    " candidate paths from " + vx.label + " to " + vy.label);
      std::vector<std::vector<std::size_t>> found_supports;  // over relevant
      std::vector<std::size_t> subset;
      for (std::size_t size = 1; size <= nr; ++size) {
        subset.assign(size, 0);
        for (std::size_t i = 0; i < size; ++i) subset[i] = i;
        for (;;) {
          bool skip = false;
          for (const auto& c : found_supports)
            if (std::includes(subset.begin(), subset.end(), c.begin(),
                              c.end())) {
              skip = true;
              break;
            }
          if (!skip) {
            // ideal elements vanishing on every relevant column outside S
            std::vector<char> in_subset(nr, 0);
            for (std::size_t i : subset) in_subset[i] = 1;
            std::vector<std::size_t> outside;
            for (std::size_t i = 0; i < nr; ++i)
              if (!in_subset[i]) outside.push_back(relevant[i]);
            Matrix m(ideal.field(), outside.size(), ideal.dim());
            for (std::size_t r = 0; r < outside.size(); ++r)
              for (std::size_t k = 0; k < ideal.dim(); ++k)
                m.at(r, k) = ideal.basis().at(k, outside[r]);
            Subspace ker = kernel(m);
            if (ker.dim() > 0) {
              if (ker.dim() != 1)
                throw InvariantViolation(
                    "two independent ideal elements share a minimal support");
              Vec lambda = ker.basis().row(0);
              Vec elem(n, Scalar::zero(ideal.field()));
              for (std::size_t k = 0; k < ideal.dim(); ++k)
                for (std::size_t j = 0; j < n; ++j)
                  elem[j] += lambda[k] * ideal.basis().at(k, j);
              Scalar lead = Scalar::zero(ideal.field());
              for (std::size_t j = 0; j < n; ++j)
                if (!elem[j].is_zero()) {
                  lead = elem[j];
                  break;
                }
              Scalar inv = lead.inverse();
              Circuit c;
              c.x = vx.id;
              c.y = vy.id;
              c.element = PathVector(ideal.field());
              std::vector<std::size_t> sup;
              for (std::size_t i = 0; i < nr; ++i)
                if (!elem[relevant[i]].is_zero()) sup.push_back(i);
              for (std::size_t j = 0; j < n; ++j)
                if (!elem[j].is_zero()) {
                  c.element.add_term(paths[j], elem[j] * inv);
                  c.support.push_back(paths[j]);
                }
              if (sup.size() != subset.size())
                throw InvariantViolation("circuit support mismatch");
              found_supports.push_back(sup);
              out.push_back(std::move(c));
            }
          }
          std::size_t i = size;
          while (i > 0 && subset[i - 1] == nr - size + i - 1) --i;
          if (i == 0) break;
          ++subset[i - 1];
          for (std::size_t k = i; k < size; ++k) subset[k] = subset[k - 1] + 1;
        }
      }
    }
  return out;
}

}  // namespace quiverhh
