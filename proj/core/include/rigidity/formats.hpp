#pragma once

#include <string>
#include <variant>

#include "rigidity/characteristic.hpp"
#include "rigidity/complex.hpp"
#include "rigidity/polytope.hpp"

namespace rigidity {

enum class FileKind { Polytope, Complex, Matrix, Json };

/// Decided by the header: "m=" followed by "i:" lines is a polytope, "m=" with
/// plain lines a complex, '{' a JSON polytope, and rows of integers a matrix.
FileKind detect_format(const std::string& text);

using Parsed = std::variant<SimplePolytope, SimplicialComplex, CharMatrix>;
Parsed parse_any(const std::string& text, Coefficients matrix_coeffs = Coefficients::Z);

/// Catalog expressions (facets 1-based, "F3" or "3"):
///   simplex | cube | dodecahedron | prism(k) | barrel(k) | edgecut(P)
///   vt(P, F1, F2, F3) | et(P, Fa, Fb) | sk(P, F, G1, ..., Gs)
///   sum(P@Fi, Q@Fj, fwd:n | rev:n)
/// Throws ParseError with the column of the offending token.
SimplePolytope parse_expression(const std::string& expr);

}  // namespace rigidity
