#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sinrcap {

/// A finite set of named points with pairwise distances, given either as
/// coordinates in R^d or as an explicit symmetric matrix.
///
/// Explicit matrices are validated for shape (square, zero diagonal,
/// symmetric, finite, nonnegative) but *not* for the triangle inequality;
/// call validate_triangle_inequality() to run that O(n^3) check when the
/// source of the matrix is untrusted.
class MetricSpace {
 public:
  static MetricSpace euclidean(std::size_t dim,
                               const std::vector<std::vector<double>>& points);
  static MetricSpace from_matrix(const std::vector<std::vector<double>>& dist);

  std::size_t size() const { return n_; }
  bool is_euclidean() const { return euclidean_; }
  std::size_t dim() const { return dim_; }

  double distance(std::size_t a, std::size_t b) const;

  /// Coordinates of point p (euclidean spaces only).
  std::span<const double> point(std::size_t p) const;

  /// Throws std::invalid_argument naming the first violating triple with
  /// d(a,c) > (d(a,b) + d(b,c)) * (1 + rel_tol).
  void validate_triangle_inequality(double rel_tol = 1e-9) const;

 private:
  MetricSpace() = default;

  bool euclidean_ = false;
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> coords_;  // euclidean: n_ * dim_, row per point
  std::vector<double> dist_;    // matrix: n_ * n_, row-major
};

}  // namespace sinrcap
