#ifndef QUIVERHH_QUIVER_HPP_
#define QUIVERHH_QUIVER_HPP_

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quiverhh/errors.hpp"

namespace quiverhh {

using VertexId = int;
using ArrowId = int;

struct Vertex {
  VertexId id;  // dense, assigned in declaration order
  std::string label;
};

enum class ArrowKind { old_arrow, new_arrow };

struct Arrow {
  ArrowId id;  // dense, assigned in declaration order
  std::string label;
  VertexId source;
  VertexId target;
  ArrowKind kind = ArrowKind::old_arrow;
};

// A finite quiver.  Construction happens once (parser or extension builder);
// afterwards the object is only read, so concurrent queries are safe.
class Quiver {
 public:
  VertexId add_vertex(const std::string& label);
  ArrowId add_arrow(const std::string& label, VertexId source, VertexId target,
                    ArrowKind kind = ArrowKind::old_arrow);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }

  std::optional<VertexId> vertex_by_label(const std::string& label) const;
  std::optional<ArrowId> arrow_by_label(const std::string& label) const;

  const std::vector<ArrowId>& arrows_from(VertexId v) const {
    return out_.at(v);
  }

  // Connectedness of the underlying undirected graph.
  bool connected() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, VertexId> vertex_labels_;
  std::map<std::string, ArrowId> arrow_labels_;
  std::vector<std::vector<ArrowId>> out_;
};

// An oriented path.  Stationary paths (length 0) carry their vertex in
// source == target.  Composition is written left to right: in pq the path p
// is traversed first.
class Path {
 public:
  static Path stationary(VertexId v) { return Path(v, v, {}); }
  Path(VertexId source, VertexId target, std::vector<ArrowId> arrows)
      : source_(source), target_(target), arrows_(std::move(arrows)) {}

  // Builds a path from consecutive arrows; throws SemanticError when a pair
  // does not compose.
  static Path of_arrows(const Quiver& q, const std::vector<ArrowId>& arrows);

  VertexId source() const { return source_; }
  VertexId target() const { return target_; }
  std::size_t length() const { return arrows_.size(); }
  bool is_stationary() const { return arrows_.empty(); }
  bool is_cycle() const { return source_ == target_ && !arrows_.empty(); }
  const std::vector<ArrowId>& arrows() const { return arrows_; }
  ArrowId arrow(std::size_t i) const { return arrows_[i]; }

  // "e_x" for stationary paths, otherwise labels joined with '*'.
  std::string str(const Quiver& q) const;

  friend bool operator==(const Path&, const Path&) = default;

  // Canonical display order: by length, then lexicographically by the arrow
  // id sequence, then by source vertex (relevant for stationary paths).
  std::strong_ordering operator<=>(const Path& o) const {
    if (auto c = arrows_.size() <=> o.arrows_.size(); c != 0) return c;
    if (auto c = arrows_ <=> o.arrows_; c != 0) return c;
    if (auto c = source_ <=> o.source_; c != 0) return c;
    return target_ <=> o.target_;
  }

 private:
  VertexId source_;
  VertexId target_;
  std::vector<ArrowId> arrows_;
};

// Returns pq when t(p) = s(q), nothing otherwise (the zero marker).
std::optional<Path> compose(const Path& p, const Path& q);

// Subpath [begin, end) of p with endpoints recovered from the quiver;
// begin == end yields the stationary path at that vertex.
Path path_slice(const Quiver& q, const Path& p, std::size_t begin,
                std::size_t end);

// Term order used by the rewriting engine: length first, and at equal length
// the path with the lexicographically smaller arrow-id sequence is the
// larger term.  Admissible: u > v implies wuw' > wvw'.
bool term_greater(const Path& a, const Path& b);

// True when w occurs in p as a factor starting at position pos.
bool subword_at(const Path& p, const Path& w, std::size_t pos);
// Smallest position of w as factor of p, or npos.
std::size_t find_subword(const Path& p, const Path& w);

struct TriangularResult {
  bool ok = false;
  // Vertex id -> position in a topological numbering (when ok).
  std::vector<int> numbering;
  // Arrow ids of an oriented cycle witness (when !ok).
  std::vector<ArrowId> cycle;
};

enum class ArrowFilter { all_arrows, old_arrows };

// Topological numbering over the selected arrow set, or an explicit oriented
// cycle.  A cycle is a result, not an error.
TriangularResult validate_triangular(const Quiver& q, ArrowFilter filter);

}  // namespace quiverhh

#endif  // QUIVERHH_QUIVER_HPP_
