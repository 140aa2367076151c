#ifndef QUIVERHH_RELATION_SYSTEM_HPP_
#define QUIVERHH_RELATION_SYSTEM_HPP_

#include <vector>

#include "quiverhh/quotient.hpp"

namespace quiverhh {

// An irredundant generating set of the relation ideal, grouped by endpoint
// pair, every member strongly minimal.  The count per pair is basis
// independent and drives the number of new arrows in the relation extension.
struct RelationSystem {
  struct Entry {
    PathVector relation;
    bool strongly_minimal;
  };
  std::vector<Entry> relations;

  std::vector<PathVector> vectors() const {
    std::vector<PathVector> v;
    for (const Entry& e : relations) v.push_back(e.relation);
    return v;
  }
};

// Lifts a basis of e_x (I / (JI + IJ)) e_y per endpoint pair out of the
// circuit list (support-minimal ideal elements are exactly the strongly
// minimal relations).
RelationSystem minimal_relation_system(const QuotientAlgebra& algebra);

struct StrongMinimality {
  bool strongly_minimal;
  // When false: a proper sub-support and a nonzero ideal member inside it.
  std::vector<Path> witness_support;
  PathVector witness;
};

// r must be an endpoint-homogeneous ideal member.  True iff no proper
// subset of its support carries a nonzero combination lying in the ideal.
StrongMinimality strongly_minimal_check(const PathVector& r,
                                        const QuotientAlgebra& algebra);

}  // namespace quiverhh

#endif  // QUIVERHH_RELATION_SYSTEM_HPP_
