#include "sinrcap/metric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sinrcap {

MetricSpace MetricSpace::euclidean(
    std::size_t dim, const std::vector<std::vector<double>>& points) {
  if (dim == 0) throw std::invalid_argument("metric: dimension must be positive");
  MetricSpace m;
  m.euclidean_ = true;
  m.n_ = points.size();
  m.dim_ = dim;
  m.coords_.reserve(m.n_ * dim);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dim)
      throw std::invalid_argument("metric: point " + std::to_string(i) +
                                  " has wrong dimension");
    for (double c : points[i]) {
      if (!std::isfinite(c))
        throw std::invalid_argument("metric: non-finite coordinate at point " +
                                    std::to_string(i));
      m.coords_.push_back(c);
    }
  }
  return m;
}

MetricSpace MetricSpace::from_matrix(
    const std::vector<std::vector<double>>& dist) {
  MetricSpace m;
  m.euclidean_ = false;
  m.n_ = dist.size();
  m.dist_.resize(m.n_ * m.n_);
  for (std::size_t i = 0; i < m.n_; ++i) {
    if (dist[i].size() != m.n_)
      throw std::invalid_argument("metric: distance matrix is not square");
    for (std::size_t j = 0; j < m.n_; ++j) {
      double d = dist[i][j];
      if (!std::isfinite(d) || d < 0.0)
        throw std::invalid_argument("metric: distance (" + std::to_string(i) +
                                    "," + std::to_string(j) +
                                    ") must be finite and nonnegative");
      m.dist_[i * m.n_ + j] = d;
    }
    if (dist[i][i] != 0.0)
      throw std::invalid_argument("metric: nonzero diagonal at point " +
                                  std::to_string(i));
  }
  for (std::size_t i = 0; i < m.n_; ++i)
    for (std::size_t j = i + 1; j < m.n_; ++j)
      if (m.dist_[i * m.n_ + j] != m.dist_[j * m.n_ + i])
        throw std::invalid_argument("metric: asymmetric distances between " +
                                    std::to_string(i) + " and " +
                                    std::to_string(j));
  return m;
}

double MetricSpace::distance(std::size_t a, std::size_t b) const {
  if (a >= n_ || b >= n_)
    throw std::out_of_range("metric: point index out of range");
  if (euclidean_) {
    double s = 0.0;
    const double* pa = coords_.data() + a * dim_;
    const double* pb = coords_.data() + b * dim_;
    for (std::size_t k = 0; k < dim_; ++k) {
      double d = pa[k] - pb[k];
      s += d * d;
    }
    return std::sqrt(s);
  }
  return dist_[a * n_ + b];
}

std::span<const double> MetricSpace::point(std::size_t p) const {
  if (!euclidean_)
    throw std::logic_error("metric: point coordinates only exist for euclidean spaces");
  if (p >= n_) throw std::out_of_range("metric: point index out of range");
  return {coords_.data() + p * dim_, dim_};
}

void MetricSpace::validate_triangle_inequality(double rel_tol) const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      if (b == a) continue;
      double ab = distance(a, b);
      for (std::size_t c = 0; c < n_; ++c) {
        double ac = distance(a, c);
        double bc = distance(b, c);
        if (ac > (ab + bc) * (1.0 + rel_tol))
          throw std::invalid_argument(
              "metric: triangle inequality violated on points (" +
              std::to_string(a) + "," + std::to_string(b) + "," +
              std::to_string(c) + ")");
      }
    }
}

}  // namespace sinrcap
