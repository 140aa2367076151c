#ifndef QUIVERHH_PRESENTATION_HPP_
#define QUIVERHH_PRESENTATION_HPP_

#include <string>
#include <vector>

#include "quiverhh/path_vector.hpp"
#include "quiverhh/quiver.hpp"

namespace quiverhh {

// A bound quiver presentation (Q, I): the input object for both the tilted
// core C and a directly given algebra B.  Relations are endpoint-homogeneous
// combinations of paths of length >= 2.
struct BoundQuiverPresentation {
  Field field;
  Quiver quiver;
  std::vector<PathVector> relations;
};

// Parses the presentation DSL:
//
//   field Q | field F <p>
//   vertices <id> <id> ...
//   arrow <label>: <v> -> <v>        (one per line)
//   relations
//   <coef>*<label>*<label>... [+|-] ...
//
// '#' starts a comment; ';' separates statements like a newline; an optional
// bare "arrows" marker line is accepted before arrow declarations.  Reports
// syntax errors with line/column and semantic errors (unknown labels,
// non-composable paths, terms of length < 2, endpoint-inhomogeneous
// relations).
BoundQuiverPresentation parse_presentation(const std::string& text);

// Convenience: read a whole file.
BoundQuiverPresentation parse_presentation_file(const std::string& path);

// Emits the same grammar bit-exactly: canonical spacing, terms in canonical
// order.  print -> parse is the identity on presentations.
std::string print_presentation(const BoundQuiverPresentation& pres);

// Overrides the declared field, re-interpreting relation coefficients.
// Used by the CLI --field flag; coefficients are re-read from the canonical
// printed form so that e.g. -1 becomes p-1 over F_p.
BoundQuiverPresentation with_field(const BoundQuiverPresentation& pres,
                                   const Field& field);

}  // namespace quiverhh

#endif  // QUIVERHH_PRESENTATION_HPP_
