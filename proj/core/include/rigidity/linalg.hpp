#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace rigidity {

/// Coefficient ring for all exact computations.
enum class Coefficients { Z, Z2 };

std::string_view to_string(Coefficients c);

/// Dense row-major integer matrix. Over Z2 entries are kept in {0, 1}.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::int64_t operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::vector<std::int64_t> column(int c) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> a_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Reduces a value into the canonical range of the coefficient ring.
inline std::int64_t reduce(std::int64_t x, Coefficients c) {
  if (c == Coefficients::Z2) return x & 1;
  return x;
}

Matrix multiply(const Matrix& a, const Matrix& b, Coefficients c = Coefficients::Z);
std::vector<std::int64_t> apply(const Matrix& a, const std::vector<std::int64_t>& x,
                                Coefficients c = Coefficients::Z);

/// Smith normal form with transforms: left * A * right == diag.
/// `left_inv` and `right_inv` are the inverses of the transforms.
struct SmithForm {
  Matrix left, left_inv, right, right_inv;
  std::vector<std::int64_t> diagonal;  // nonzero invariant factors, each dividing the next
  int rank() const { return static_cast<int>(diagonal.size()); }
};

SmithForm smith_normal_form(const Matrix& a, Coefficients c);

/// Rank over Z (equivalently Q) or Z2.
int rank(const Matrix& a, Coefficients c);

/// Nonzero invariant factors without transform tracking.
std::vector<std::int64_t> invariant_factors(const Matrix& a, Coefficients c);

/// Determinant of a small square matrix by fraction-free elimination.
std::int64_t determinant(const Matrix& a);

/// Inverse of a unimodular integer matrix (or invertible Z2 matrix).
/// Throws InvariantViolation if the matrix is not invertible over the ring.
Matrix inverse_unimodular(const Matrix& a, Coefficients c);

/// Cohomology at one spot of a cochain complex C^{p-1} -> C^p -> C^{p+1}.
///
/// Generators are ordered free first, then torsion. `classify` maps a cocycle
/// to its coordinates in that generator basis (torsion coordinates reduced
/// modulo their order).
class SpotCohomology {
 public:
  /// `incoming` is dim C^p x dim C^{p-1}; `outgoing` is dim C^{p+1} x dim C^p.
  SpotCohomology(const Matrix& incoming, const Matrix& outgoing, int dim, Coefficients c);

  int free_rank() const { return free_rank_; }
  const std::vector<std::int64_t>& torsion() const { return torsion_; }
  int generator_count() const { return free_rank_ + static_cast<int>(torsion_.size()); }

  /// Cocycle representing generator g, as a vector over the basis of C^p.
  const std::vector<std::int64_t>& representative(int g) const { return reps_[g]; }

  /// Order of generator g: 0 for free generators.
  std::int64_t order(int g) const { return g < free_rank_ ? 0 : torsion_[g - free_rank_]; }

  /// Coordinates of the class of a cocycle. Throws BasisMismatch on non-cocycles.
  std::vector<std::int64_t> classify(const std::vector<std::int64_t>& cocycle) const;

  bool is_cocycle(const std::vector<std::int64_t>& v) const;

 private:
  Coefficients coeffs_;
  int dim_ = 0;
  Matrix outgoing_;
  Matrix kernel_coords_;   // rows: coordinates in a Z-basis of ker(outgoing)
  Matrix quotient_left_;   // Smith left transform of the boundary lattice in kernel coords
  int boundary_rank_ = 0;
  int first_generator_ = 0;  // index in Smith coordinates of the first nontrivial factor
  int free_rank_ = 0;
  std::vector<std::int64_t> torsion_;
  std::vector<std::vector<std::int64_t>> reps_;
};

}  // namespace rigidity
