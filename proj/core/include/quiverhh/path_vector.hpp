#ifndef QUIVERHH_PATH_VECTOR_HPP_
#define QUIVERHH_PATH_VECTOR_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quiverhh/field.hpp"
#include "quiverhh/quiver.hpp"

namespace quiverhh {

// A k-linear combination of paths in canonical form: no zero coefficients,
// terms kept in display order (length, then lexicographically by arrow ids).
class PathVector {
 public:
  explicit PathVector(const Field& f) : field_(f) {}
  static PathVector zero(const Field& f) { return PathVector(f); }
  static PathVector of_path(const Field& f, const Path& p) {
    PathVector v(f);
    v.add_term(p, Scalar::one(f));
    return v;
  }

  const Field& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const std::map<Path, Scalar>& terms() const { return terms_; }

  // Accumulates c * p, dropping the term if it cancels.
  void add_term(const Path& p, const Scalar& c);
  Scalar coefficient(const Path& p) const;

  PathVector operator+(const PathVector& o) const;
  PathVector operator-(const PathVector& o) const;
  PathVector operator-() const;
  PathVector operator*(const Scalar& c) const;
  PathVector& operator+=(const PathVector& o);
  PathVector& operator-=(const PathVector& o);

  friend bool operator==(const PathVector&, const PathVector&) = default;

  // Left/right multiplication by a path in the path algebra; non-composable
  // products vanish.
  PathVector left_mul(const Path& p) const;
  PathVector right_mul(const Path& p) const;

  // Largest term under the rewriting order (longest, then lexicographically
  // least arrow-id sequence).  Empty for the zero vector.
  std::optional<std::pair<Path, Scalar>> leading_term() const;
  std::size_t degree() const;  // max term length; 0 for zero vector

  // All terms share one (source, target) pair.
  bool endpoint_homogeneous() const;
  // Valid only for nonzero endpoint-homogeneous vectors.
  VertexId source() const { return terms_.begin()->first.source(); }
  VertexId target() const { return terms_.begin()->first.target(); }

  // Canonical text form, e.g. "a1*b1 + 2*a2*b1 - a2*b2".
  std::string str(const Quiver& q) const;

  std::vector<Path> support() const;

 private:
  Field field_;
  std::map<Path, Scalar> terms_;
};

}  // namespace quiverhh

#endif  // QUIVERHH_PATH_VECTOR_HPP_
