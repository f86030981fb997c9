#include "rigidity/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "rigidity/errors.hpp"

namespace rigidity {

std::string_view to_string(Coefficients c) {
  return c == Coefficients::Z ? "z" : "z2";
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<std::int64_t> Matrix::column(int c) const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorKind::Overflow, "integer overflow in addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorKind::Overflow, "integer overflow in multiplication");
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b, Coefficients c) {
  if (a.cols() != b.rows()) fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const std::int64_t x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b(k, j) == 0) continue;
        out(i, j) = reduce(checked_add(out(i, j), checked_mul(x, b(k, j))), c);
      }
    }
  return out;
}

std::vector<std::int64_t> apply(const Matrix& a, const std::vector<std::int64_t>& x, Coefficients c) {
  if (static_cast<int>(x.size()) != a.cols()) fail(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
  std::vector<std::int64_t> out(static_cast<std::size_t>(a.rows()), 0);
  for (int i = 0; i < a.rows(); ++i) {
    std::int64_t s = 0;
    for (int k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0 && x[k] != 0) s = checked_add(s, checked_mul(a(i, k), x[k]));
    out[i] = reduce(s, c);
  }
  return out;
}

namespace {

class SmithReducer {
 public:
  SmithReducer(const Matrix& a, Coefficients c, bool track)
      : a_(a), c_(c), track_(track) {
    for (int i = 0; i < a_.rows(); ++i)
      for (int j = 0; j < a_.cols(); ++j) a_(i, j) = reduce(a_(i, j), c_);
    if (track_) {
      left_ = left_inv_ = Matrix::identity(a_.rows());
      right_ = right_inv_ = Matrix::identity(a_.cols());
    }
  }

  SmithForm run() {
    const int rows = a_.rows(), cols = a_.cols();
    std::vector<std::int64_t> diag;
    for (int t = 0; t < std::min(rows, cols); ++t) {
      int pi = -1, pj = -1;
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      for (int i = t; i < rows && best != 1; ++i)
        for (int j = t; j < cols; ++j) {
          const std::int64_t v = std::llabs(a_(i, j));
          if (v != 0 && v < best) {
            best = v, pi = i, pj = j;
            if (v == 1) break;
          }
        }
      if (pi < 0) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      while (true) {
        const std::int64_t p = a_(t, t);
        for (int i = t + 1; i < rows; ++i)
          if (a_(i, t) != 0) add_row(i, t, -quotient(a_(i, t), p));
        for (int j = t + 1; j < cols; ++j)
          if (a_(t, j) != 0) add_col(j, t, -quotient(a_(t, j), p));

        int ri = -1, rj = -1;
        std::int64_t rbest = std::numeric_limits<std::int64_t>::max();
        for (int i = t + 1; i < rows; ++i)
          if (a_(i, t) != 0 && std::llabs(a_(i, t)) < rbest) rbest = std::llabs(a_(i, t)), ri = i, rj = -1;
        for (int j = t + 1; j < cols; ++j)
          if (a_(t, j) != 0 && std::llabs(a_(t, j)) < rbest) rbest = std::llabs(a_(t, j)), rj = j, ri = -1;
        if (ri >= 0) {
          swap_rows(t, ri);
          continue;
        }
        if (rj >= 0) {
          swap_cols(t, rj);
          continue;
        }
        if (c_ == Coefficients::Z && std::llabs(p) != 1) {
          int bad = -1;
          for (int i = t + 1; i < rows && bad < 0; ++i)
            for (int j = t + 1; j < cols; ++j)
              if (a_(i, j) % p != 0) {
                bad = i;
                break;
              }
          if (bad >= 0) {
            add_row(t, bad, 1);
            continue;
          }
        }
        break;
      }
      if (a_(t, t) < 0) negate_row(t);
      diag.push_back(a_(t, t));
    }
    SmithForm f;
    f.diagonal = std::move(diag);
    if (track_) {
      f.left = std::move(left_);
      f.left_inv = std::move(left_inv_);
      f.right = std::move(right_);
      f.right_inv = std::move(right_inv_);
    }
    return f;
  }

 private:
  std::int64_t quotient(std::int64_t x, std::int64_t p) const {
    if (c_ == Coefficients::Z2) return x;  // p == 1
    return x / p;
  }
  std::int64_t red(std::int64_t x) const { return reduce(x, c_); }

  // row_i += q * row_j
  void add_row(int i, int j, std::int64_t q) {
    if (q == 0) return;
    for (int k = 0; k < a_.cols(); ++k)
      if (a_(j, k) != 0) a_(i, k) = red(checked_add(a_(i, k), checked_mul(q, a_(j, k))));
    if (!track_) return;
    for (int k = 0; k < left_.cols(); ++k)
      if (left_(j, k) != 0) left_(i, k) = red(checked_add(left_(i, k), checked_mul(q, left_(j, k))));
    for (int k = 0; k < left_inv_.rows(); ++k)
      if (left_inv_(k, i) != 0) left_inv_(k, j) = red(checked_add(left_inv_(k, j), checked_mul(-q, left_inv_(k, i))));
  }

  // col_i += q * col_j
  void add_col(int i, int j, std::int64_t q) {
    if (q == 0) return;
    for (int k = 0; k < a_.rows(); ++k)
      if (a_(k, j) != 0) a_(k, i) = red(checked_add(a_(k, i), checked_mul(q, a_(k, j))));
    if (!track_) return;
    for (int k = 0; k < right_.rows(); ++k)
      if (right_(k, j) != 0) right_(k, i) = red(checked_add(right_(k, i), checked_mul(q, right_(k, j))));
    for (int k = 0; k < right_inv_.cols(); ++k)
      if (right_inv_(i, k) != 0) right_inv_(j, k) = red(checked_add(right_inv_(j, k), checked_mul(-q, right_inv_(i, k))));
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < a_.cols(); ++k) std::swap(a_(i, k), a_(j, k));
    if (!track_) return;
    for (int k = 0; k < left_.cols(); ++k) std::swap(left_(i, k), left_(j, k));
    for (int k = 0; k < left_inv_.rows(); ++k) std::swap(left_inv_(k, i), left_inv_(k, j));
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < a_.rows(); ++k) std::swap(a_(k, i), a_(k, j));
    if (!track_) return;
    for (int k = 0; k < right_.rows(); ++k) std::swap(right_(k, i), right_(k, j));
    for (int k = 0; k < right_inv_.cols(); ++k) std::swap(right_inv_(i, k), right_inv_(j, k));
  }

  void negate_row(int i) {
    for (int k = 0; k < a_.cols(); ++k) a_(i, k) = -a_(i, k);
    if (!track_) return;
    for (int k = 0; k < left_.cols(); ++k) left_(i, k) = -left_(i, k);
    for (int k = 0; k < left_inv_.rows(); ++k) left_inv_(k, i) = -left_inv_(k, i);
  }

  Matrix a_;
  Coefficients c_;
  bool track_;
  Matrix left_, left_inv_, right_, right_inv_;
};

}  // namespace

SmithForm smith_normal_form(const Matrix& a, Coefficients c) {
  return SmithReducer(a, c, true).run();
}

int rank(const Matrix& a, Coefficients c) {
  return SmithReducer(a, c, false).run().rank();
}

std::vector<std::int64_t> invariant_factors(const Matrix& a, Coefficients c) {
  return SmithReducer(a, c, false).run().diagonal;
}

std::int64_t determinant(const Matrix& a) {
  if (a.rows() != a.cols()) fail(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  Matrix m = a;
  std::int64_t sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m(i, j) = checked_add(checked_mul(m(i, j), m(k, k)), -checked_mul(m(i, k), m(k, j))) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Matrix inverse_unimodular(const Matrix& a, Coefficients c) {
  if (a.rows() != a.cols()) fail(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const SmithForm f = smith_normal_form(a, c);
  if (f.rank() != a.rows() || std::any_of(f.diagonal.begin(), f.diagonal.end(), [](std::int64_t d) { return d != 1; }))
    fail(ErrorKind::InvariantViolation, "matrix is not invertible over the coefficient ring");
  return multiply(f.right, f.left, c);
}

SpotCohomology::SpotCohomology(const Matrix& incoming, const Matrix& outgoing, int dim, Coefficients c)
    : coeffs_(c), dim_(dim), outgoing_(outgoing) {
  Matrix kernel_basis;
  if (outgoing.rows() == 0 || dim == 0) {
    kernel_basis = Matrix::identity(dim);
    kernel_coords_ = Matrix::identity(dim);
  } else {
    const SmithForm s = smith_normal_form(outgoing, c);
    const int r = s.rank();
    const int k = dim - r;
    kernel_basis = Matrix(dim, k);
    kernel_coords_ = Matrix(k, dim);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < dim; ++i) {
        kernel_basis(i, j) = s.right(i, r + j);
        kernel_coords_(j, i) = s.right_inv(r + j, i);
      }
  }
  const int k = kernel_basis.cols();

  Matrix boundary_coords(k, incoming.cols());
  if (incoming.cols() > 0 && k > 0) boundary_coords = multiply(kernel_coords_, incoming, c);
  const SmithForm q = smith_normal_form(boundary_coords, c);
  quotient_left_ = q.left;
  boundary_rank_ = q.rank();
  const Matrix basis = k > 0 ? multiply(kernel_basis, q.left_inv, c) : Matrix(dim, 0);

  free_rank_ = k - boundary_rank_;
  first_generator_ = boundary_rank_;
  for (int j = 0; j < boundary_rank_; ++j)
    if (q.diagonal[j] != 1) {
      first_generator_ = std::min(first_generator_, j);
      torsion_.push_back(q.diagonal[j]);
    }
  for (int j = boundary_rank_; j < k; ++j) reps_.push_back(basis.column(j));
  for (int j = 0; j < boundary_rank_; ++j)
    if (q.diagonal[j] != 1) reps_.push_back(basis.column(j));
}

bool SpotCohomology::is_cocycle(const std::vector<std::int64_t>& v) const {
  if (static_cast<int>(v.size()) != dim_) return false;
  if (outgoing_.rows() == 0) return true;
  const auto image = apply(outgoing_, v, coeffs_);
  return std::all_of(image.begin(), image.end(), [](std::int64_t x) { return x == 0; });
}

std::vector<std::int64_t> SpotCohomology::classify(const std::vector<std::int64_t>& cocycle) const {
  if (!is_cocycle(cocycle)) fail(ErrorKind::BasisMismatch, "vector is not a cocycle of this complex");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(generator_count()));
  if (kernel_coords_.rows() == 0) return out;
  const auto a = apply(quotient_left_, apply(kernel_coords_, cocycle, coeffs_), coeffs_);
  for (int j = boundary_rank_; j < static_cast<int>(a.size()); ++j) out.push_back(reduce(a[j], coeffs_));
  int t = 0;
  for (int j = first_generator_; j < boundary_rank_; ++j) {
    if (t >= static_cast<int>(torsion_.size())) break;
    const std::int64_t d = torsion_[t];
    std::int64_t x = a[j] % d;
    if (x < 0) x += d;
    out.push_back(x);
    ++t;
  }
  return out;
}

}  // namespace rigidity
