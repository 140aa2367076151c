#include "quiverhh/quiver.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace quiverhh {

VertexId Quiver::add_vertex(const std::string& label) {
  if (vertex_labels_.count(label))
    throw SemanticError("duplicate vertex '" + label + "'");
  VertexId id = static_cast<VertexId>(vertices_.size());
  vertices_.push_back(Vertex{id, label});
  vertex_labels_[label] = id;
  out_.emplace_back();
  return id;
}

ArrowId Quiver::add_arrow(const std::string& label, VertexId source,
                          VertexId target, ArrowKind kind) {
  if (arrow_labels_.count(label))
    throw SemanticError("duplicate arrow '" + label + "'");
  if (source < 0 || source >= static_cast<VertexId>(vertices_.size()) ||
      target < 0 || target >= static_cast<VertexId>(vertices_.size()))
    throw SemanticError("arrow '" + label + "' references unknown vertex");
  ArrowId id = static_cast<ArrowId>(arrows_.size());
  arrows_.push_back(Arrow{id, label, source, target, kind});
  arrow_labels_[label] = id;
  out_[source].push_back(id);
  return id;
}

std::optional<VertexId> Quiver::vertex_by_label(
    const std::string& label) const {
  auto it = vertex_labels_.find(label);
  if (it == vertex_labels_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> Quiver::arrow_by_label(const std::string& label) const {
  auto it = arrow_labels_.find(label);
  if (it == arrow_labels_.end()) return std::nullopt;
  return it->second;
}

bool Quiver::connected() const {
  if (vertices_.empty()) return true;
  std::vector<char> seen(vertices_.size(), 0);
  std::deque<VertexId> queue{0};
  seen[0] = 1;
  std::size_t visited = 1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const Arrow& a : arrows_) {
      VertexId next = -1;
      if (a.source == v)
        next = a.target;
      else if (a.target == v)
        next = a.source;
      if (next >= 0 && !seen[next]) {
        seen[next] = 1;
        ++visited;
        queue.push_back(next);
      }
    }
  }
  return visited == vertices_.size();
}

Path Path::of_arrows(const Quiver& q, const std::vector<ArrowId>& arrows) {
  if (arrows.empty())
    throw SemanticError("a path of arrows needs at least one arrow");
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
    if (q.arrow(arrows[i]).target != q.arrow(arrows[i + 1]).source)
      throw SemanticError("arrows '" + q.arrow(arrows[i]).label + "' and '" +
                          q.arrow(arrows[i + 1]).label + "' do not compose");
  return Path(q.arrow(arrows.front()).source, q.arrow(arrows.back()).target,
              arrows);
}

std::string Path::str(const Quiver& q) const {
  if (is_stationary()) return "e_" + q.vertex(source_).label;
  std::string s;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (i) s += "*";
    s += q.arrow(arrows_[i]).label;
  }
  return s;
}

std::optional<Path> compose(const Path& p, const Path& q) {
  if (p.target() != q.source()) return std::nullopt;
  if (p.is_stationary()) return q;
  if (q.is_stationary()) return p;
  std::vector<ArrowId> arrows = p.arrows();
  arrows.insert(arrows.end(), q.arrows().begin(), q.arrows().end());
  return Path(p.source(), q.target(), std::move(arrows));
}

Path path_slice(const Quiver& q, const Path& p, std::size_t begin,
                std::size_t end) {
  if (begin > end || end > p.length())
    throw SemanticError("path slice out of range");
  if (begin == end) {
    VertexId v = begin == 0 ? p.source()
                            : (begin == p.length()
                                   ? p.target()
                                   : q.arrow(p.arrow(begin)).source);
    return Path::stationary(v);
  }
  std::vector<ArrowId> arrows(p.arrows().begin() + begin,
                              p.arrows().begin() + end);
  return Path(q.arrow(arrows.front()).source, q.arrow(arrows.back()).target,
              std::move(arrows));
}

bool term_greater(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() > b.length();
  if (a.arrows() != b.arrows()) return a.arrows() < b.arrows();
  if (a.source() != b.source()) return a.source() < b.source();
  return a.target() < b.target();
}

bool subword_at(const Path& p, const Path& w, std::size_t pos) {
  if (pos + w.length() > p.length()) return false;
  for (std::size_t i = 0; i < w.length(); ++i)
    if (p.arrow(pos + i) != w.arrow(i)) return false;
  return true;
}

std::size_t find_subword(const Path& p, const Path& w) {
  if (w.length() == 0 || w.length() > p.length()) return std::string::npos;
  for (std::size_t pos = 0; pos + w.length() <= p.length(); ++pos)
    if (subword_at(p, w, pos)) return pos;
  return std::string::npos;
}

TriangularResult validate_triangular(const Quiver& q, ArrowFilter filter) {
  const auto selected = [&](const Arrow& a) {
    return filter == ArrowFilter::all_arrows ||
           a.kind == ArrowKind::old_arrow;
  };
  const std::size_t n = q.num_vertices();
  std::vector<int> indeg(n, 0);
  for (const Arrow& a : q.arrows())
    if (selected(a)) ++indeg[a.target];

  TriangularResult res;
  res.numbering.assign(n, -1);
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < static_cast<VertexId>(n); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  int next = 0;
  std::vector<char> done(n, 0);
  while (!ready.empty()) {
    // smallest id first keeps the numbering deterministic
    auto it = std::min_element(ready.begin(), ready.end());
    VertexId v = *it;
    ready.erase(it);
    res.numbering[v] = next++;
    done[v] = 1;
    for (ArrowId a : q.arrows_from(v))
      if (selected(q.arrow(a)) && --indeg[q.arrow(a).target] == 0)
        ready.push_back(q.arrow(a).target);
  }
  if (next == static_cast<int>(n)) {
    res.ok = true;
    return res;
  }

  // Find an oriented cycle among the leftover vertices by walking smallest
  // arrow ids until a vertex repeats.
  res.ok = false;
  VertexId start = 0;
  while (done[start]) ++start;
  std::vector<ArrowId> walk;
  std::vector<int> seen_at(n, -1);
  VertexId v = start;
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<int>(walk.size());
    ArrowId chosen = -1;
    for (ArrowId a : q.arrows_from(v)) {
      const Arrow& arr = q.arrow(a);
      if (selected(arr) && !done[arr.target]) {
        chosen = a;
        break;
      }
    }
    walk.push_back(chosen);
    v = q.arrow(chosen).target;
  }
  res.cycle.assign(walk.begin() + seen_at[v], walk.end());
  return res;
}

}  // namespace quiverhh
