#ifndef QUIVERHH_GROEBNER_HPP_
#define QUIVERHH_GROEBNER_HPP_

#include <optional>
#include <vector>

#include "quiverhh/path_vector.hpp"
#include "quiverhh/presentation.hpp"

namespace quiverhh {

// One summand of an ideal-membership expression: coeff * left * r * right,
// where r is an input generator (referenced by index).
struct TraceTerm {
  Scalar coeff;
  Path left;
  int generator;
  Path right;
};

// Expands a trace back into an element of the path algebra.
PathVector expand_trace(const Field& f, const std::vector<TraceTerm>& trace,
                        const std::vector<PathVector>& generators);

// Two-sided Groebner basis of the relation ideal under the length-first,
// lexicographic-by-arrow-id order, completed by overlap (Buchberger-style)
// S-elements up to a degree bound.  Every basis element is monic, fully
// reduced against the others, and carries its expression over the input
// generators.
class GroebnerBasis {
 public:
  struct Element {
    PathVector poly;
    Path lead;  // cached leading path
    std::vector<TraceTerm> origin;  // poly == sum of origin over generators
  };

  const std::vector<Element>& elements() const { return elements_; }
  const std::vector<PathVector>& generators() const { return generators_; }
  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }

  int completion_degree() const { return completion_degree_; }
  // All S-elements reduced to zero, with no degree cut-off left pending.
  bool fully_completed() const { return fully_completed_; }
  // Smallest L such that every path of length L is reducible.
  std::optional<int> finite_dim_certificate() const { return certificate_; }

  bool path_reducible(const Path& p) const;

  // Irreducible paths of each length 0..max_len (level-by-level growth).
  std::vector<std::vector<Path>> irreducible_levels(int max_len) const;

 private:
  friend GroebnerBasis complete(const BoundQuiverPresentation&, int);
  friend struct CompletionState;

  Field field_{Field::rationals()};
  Quiver quiver_;
  std::vector<PathVector> generators_;
  std::vector<Element> elements_;
  int completion_degree_ = 0;
  bool fully_completed_ = false;
  std::optional<int> certificate_;
};

// Overlap completion truncated at max_degree (which must be at least the
// largest relation length; pass 0 to use the default bound
// 2 * max relation length + |Q_0|).  Throws NotFiniteDimensional when no
// finiteness certificate appears by the bound.
GroebnerBasis complete(const BoundQuiverPresentation& pres, int max_degree);

int default_max_degree(const BoundQuiverPresentation& pres);

// Normal form with a reduction certificate: input - normal_form equals the
// expanded trace exactly, with generators drawn from the completion input.
struct ReductionCertificate {
  PathVector input;
  PathVector normal_form;
  std::vector<TraceTerm> trace;
};

ReductionCertificate normal_form(const PathVector& x, const GroebnerBasis& gb);

}  // namespace quiverhh

#endif  // QUIVERHH_GROEBNER_HPP_
