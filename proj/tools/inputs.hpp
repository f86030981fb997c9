#pragma once

#include <stdexcept>
#include <string>

#include "rigidity/characteristic.hpp"
#include "rigidity/complex.hpp"
#include "rigidity/polytope.hpp"

namespace rigidity::cli {

/// Raised for problems with the invocation itself (exit status 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "catalog:<expression>" or a path to a polytope file (text or JSON).
SimplePolytope load_polytope(const std::string& spec);

/// A polytope spec, or "catalog:polygon(m)" for an m-gon.
CombinatorialBase load_base(const std::string& spec);

/// A complex file, or any polytope spec (its dual complex).
SimplicialComplex load_complex(const std::string& spec);

/// "matrix:<row>;<row>" inline ('/' also separates rows), "colouring:<k>" (k-th colouring class of the
/// base, 1-based), or a path to a matrix file.
CharMatrix load_matrix(const std::string& spec, const CombinatorialBase& base, Coefficients c);

std::string read_file(const std::string& path);

}  // namespace rigidity::cli
