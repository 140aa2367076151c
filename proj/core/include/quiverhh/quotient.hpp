#ifndef QUIVERHH_QUOTIENT_HPP_
#define QUIVERHH_QUOTIENT_HPP_

#include <map>
#include <utility>
#include <vector>

#include "quiverhh/groebner.hpp"
#include "quiverhh/ideal_spans.hpp"
#include "quiverhh/linalg.hpp"

namespace quiverhh {

using SparseVec = std::vector<std::pair<int, Scalar>>;

// The finite-dimensional algebra A = kQ/I: completed Groebner basis, the
// normal-path basis, structure constants, and A = A_0 + r with A_0 spanned
// by the stationary paths.  Immutable after build; concurrent reads are
// safe.
class QuotientAlgebra {
 public:
  // max_degree = 0 picks the default bound; throws NotFiniteDimensional.
  static QuotientAlgebra build(const BoundQuiverPresentation& pres,
                               int max_degree = 0);

  const BoundQuiverPresentation& presentation() const { return pres_; }
  const GroebnerBasis& groebner() const { return gb_; }
  const Field& field() const { return pres_.field; }
  const Quiver& quiver() const { return pres_.quiver; }

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Path>& basis() const { return basis_; }
  // Indices into basis() of the normal paths of length >= 1.
  const std::vector<int>& radical() const { return radical_; }
  int radical_position(int basis_idx) const {
    return radical_pos_[basis_idx];
  }

  int basis_index(const Path& p) const;  // -1 when p is not a basis path
  int stationary_index(VertexId v) const { return stationary_[v]; }
  VertexId source_of(int basis_idx) const { return basis_[basis_idx].source(); }
  VertexId target_of(int basis_idx) const { return basis_[basis_idx].target(); }

  // Normal-form coordinates of an arbitrary path-algebra element.
  Vec coords(const PathVector& x) const;
  PathVector from_coords(const Vec& v) const;
  std::string coords_str(const Vec& v) const;

  const SparseVec& product(int i, int j) const {
    return products_[i * basis_.size() + j];
  }
  Vec multiply(const Vec& a, const Vec& b) const;

  int dim_pair(VertexId x, VertexId y) const;

 private:
  BoundQuiverPresentation pres_;
  GroebnerBasis gb_;
  std::vector<Path> basis_;
  std::map<Path, int> basis_lookup_;
  std::vector<int> radical_;
  std::vector<int> radical_pos_;
  std::vector<int> stationary_;
  std::vector<SparseVec> products_;
};

// Per endpoint pair dimensions of e_x A e_y and of the ideal inside the
// truncated path space, computed along two independent routes (Groebner
// normal forms vs. truncated spans) and asserted equal.
struct IdealDims {
  int truncation;
  struct Entry {
    VertexId x, y;
    int paths;        // paths x -> y of length <= truncation
    int dim_ideal;    // dim e_x I e_y within the truncation
    int dim_algebra;  // dim e_x A e_y
  };
  std::vector<Entry> entries;
};

// Throws OracleMismatch when the two routes disagree.
IdealDims ideal_dims(const QuotientAlgebra& algebra);

}  // namespace quiverhh

#endif  // QUIVERHH_QUOTIENT_HPP_
