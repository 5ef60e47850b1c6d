// Algebra spec documents: a small JSON format describing a superalgebra by
// basis names and one orientation of each bracket, plus serialization of the
// built-in families. Emit-then-parse reproduces identical structure constants.
//
// Document shape:
//   {
//     "field": "Q" | {"Fp": 5},
//     "even_basis": ["X1", ...],
//     "odd_basis": ["Y1", ...],
//     "brackets": [
//       {"left": "X1", "right": "X2",
//        "result": [{"basis": "X3", "coeff": "1"}]},
//       ...
//     ],
//     "family": {"kind": "SL", "ns": [4], "ms": [3]}   // optional metadata
//   }
#pragma once

#include <string>

#include "lsc/superalgebra.h"

namespace lsc {

// Parse a spec document. Throws ParseError (malformed document, unknown or
// duplicate names, bad coefficients; orientation conflicts surface as
// OrientationConflictError) and, when run_validation is set, DomainError
// carrying the validation report of a structurally broken algebra.
SuperAlgebra parse_algebra(const std::string& text, bool run_validation = true);

// Canonical serialization: sorted keys, brackets in canonical orientation
// and ascending index order, exact coefficient strings. Ends with a newline.
std::string serialize_algebra(const SuperAlgebra& g);

// Whole-file read; "-" reads stdin to exhaustion. Throws Error on I/O failure.
std::string read_input(const std::string& path);

// Write text to a file, or to stdout when path is "-" or empty.
void write_output(const std::string& path, const std::string& text);

}  // namespace lsc
