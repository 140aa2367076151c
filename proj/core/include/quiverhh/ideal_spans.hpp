#ifndef QUIVERHH_IDEAL_SPANS_HPP_
#define QUIVERHH_IDEAL_SPANS_HPP_

#include <map>
#include <utility>
#include <vector>

#include "quiverhh/linalg.hpp"
#include "quiverhh/path_vector.hpp"

namespace quiverhh {

// All paths of length 0..max_len in canonical order.
std::vector<Path> all_paths_up_to(const Quiver& q, int max_len);

// Pure linear algebra on the truncated path space: spans of all products
// u * r * v of bounded degree.  This route never consults a Groebner basis,
// which makes it an independent oracle for ideal and quotient dimensions.
class TruncatedIdealSpan {
 public:
  TruncatedIdealSpan(const Quiver& quiver, const Field& field,
                     const std::vector<PathVector>& generators, int degree);

  int degree() const { return degree_; }
  const Quiver& quiver() const { return *quiver_; }

  // Paths x -> y of length 0..degree, canonical order (the coordinate basis).
  const std::vector<Path>& pair_paths(VertexId x, VertexId y) const;

  // Span of { u r v : deg <= degree } with endpoints (x, y).
  const Subspace& ideal_span(VertexId x, VertexId y) const;
  // Same but only products with len(u) + len(v) >= 1, i.e. (JI + IJ).
  const Subspace& arrow_ideal_span(VertexId x, VertexId y) const;

  Vec coordinates(const PathVector& v) const;  // in pair_paths coords
  PathVector from_coordinates(VertexId x, VertexId y, const Vec& c) const;

 private:
  const Quiver* quiver_;
  Field field_;
  int degree_;
  std::vector<Path> empty_paths_;
  std::map<std::pair<VertexId, VertexId>, std::vector<Path>> paths_;
  std::map<std::pair<VertexId, VertexId>, std::map<Path, std::size_t>> index_;
  std::map<std::pair<VertexId, VertexId>, Subspace> ideal_;
  std::map<std::pair<VertexId, VertexId>, Subspace> arrow_ideal_;
};

// A support-minimal nonzero ideal element per endpoint pair (a circuit of
// the coordinate matroid restricted to the ideal).  Circuits are exactly the
// strongly minimal relations up to scalar.
struct Circuit {
  VertexId x, y;
  std::vector<Path> support;
  PathVector element;
};

// Enumerates circuits by subset search over path supports, smallest
// cardinality first, deduplicated by recorded supports.  Throws when a pair
// has more than max_support_paths candidate paths.
std::vector<Circuit> ideal_circuits(const TruncatedIdealSpan& span,
                                    std::size_t max_support_paths = 20);

}  // namespace quiverhh

#endif  // QUIVERHH_IDEAL_SPANS_HPP_
