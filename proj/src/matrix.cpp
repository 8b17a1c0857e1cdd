#include "sinrcap/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "sinrcap/errors.hpp"

namespace sinrcap {

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  Matrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw std::invalid_argument("matrix: rows do not form a square matrix");
    for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

double Matrix::row_sum(std::size_t i) const {
  double s = 0.0;
  for (std::size_t j = 0; j < n_; ++j) s += a_[i * n_ + j];
  return s;
}

double Matrix::total_sum() const {
  double s = 0.0;
  for (double v : a_) s += v;
  return s;
}

std::vector<double> Matrix::apply(std::span<const double> x) const {
  if (x.size() != n_)
    throw std::invalid_argument("matrix: vector length does not match");
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double s = 0.0;
    const double* row = a_.data() + i * n_;
    for (std::size_t j = 0; j < n_; ++j) s += row[j] * x[j];
    y[i] = s;
  }
  return y;
}

AffectanceMatrix build_matrix(std::span<const int> S, const PowerAssignment& p,
                              const Instance& inst) {
  LinkTerms t = link_terms(p, inst);
  for (int v : S)
    if (t.weak[inst.link(v).id])
      throw WeakLinkError(v, "matrix: link " + std::to_string(v) +
                                 " is weak under the given power");
  AffectanceMatrix out;
  out.ids.assign(S.begin(), S.end());
  out.power = p;
  out.entries = Matrix(S.size());
  out.c.reserve(S.size());
  for (int v : S) out.c.push_back(t.c[v]);
  const double alpha = inst.alpha();
  for (std::size_t i = 0; i < out.ids.size(); ++i) {
    int v = out.ids[i];
    double lv = inst.link(v).length;
    for (std::size_t j = 0; j < out.ids.size(); ++j) {
      int w = out.ids[j];
      if (w == v) continue;
      double d = link_distance(w, v, inst);
      if (d == 0.0)
        throw DegenerateDistanceError(
            w, v, "matrix: links " + std::to_string(w) + " and " +
                      std::to_string(v) + " are at distance zero");
      out.entries.at(i, j) =
          t.c[v] * (t.power[w] / t.power[v]) * std::pow(lv / d, alpha);
    }
  }
  return out;
}

PowerCertificate::PowerCertificate(std::vector<double> values) : p_(std::move(values)) {
  if (p_.empty())
    throw std::invalid_argument("certificate: empty power vector");
  for (std::size_t i = 0; i < p_.size(); ++i)
    if (!(p_[i] > 0.0) || !std::isfinite(p_[i]))
      throw std::invalid_argument("certificate: entry " + std::to_string(i) +
                                  " must be positive and finite");
}

std::vector<std::size_t> filter_rows(const Matrix& m, double gamma,
                                     double lambda) {
  if (!(gamma > 0.0) || !(lambda > 0.0))
    throw std::invalid_argument("filter_rows: gamma and lambda must be positive");
  const std::size_t n = m.size();
  if (m.total_sum() > gamma * static_cast<double>(n))
    throw std::invalid_argument("filter_rows: entry sum exceeds gamma * n");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (m.row_sum(i) <= gamma * lambda) keep.push_back(i);
  return keep;
}

SymmetryBoundReport check_approx_symmetric_bound(const Matrix& m,
                                                 const PowerCertificate& cert,
                                                 double q) {
  SymmetryBoundReport r;
  const std::size_t n = m.size();
  if (cert.p().size() != n) {
    r.precondition_failure = "certificate length does not match matrix";
    return r;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (m.at(i, j) < 0.0) {
        r.precondition_failure = "negative entry at (" + std::to_string(i) +
                                 "," + std::to_string(j) + ")";
        return r;
      }
      if (m.at(i, j) > q * m.at(j, i) * (1.0 + kFeasibilityRelTol)) {
        r.precondition_failure = "entry (" + std::to_string(i) + "," +
                                 std::to_string(j) +
                                 ") breaks q-approximate symmetry";
        return r;
      }
    }
  std::vector<double> mp = m.apply(cert.p());
  for (std::size_t i = 0; i < n; ++i)
    if (mp[i] > cert.p()[i] * (1.0 + kFeasibilityRelTol)) {
      r.precondition_failure =
          "M*p exceeds p at row " + std::to_string(i);
      return r;
    }
  r.preconditions_ok = true;
  r.se = m.total_sum();
  r.holds = r.se <= (q + 1.0) * static_cast<double>(n);
  return r;
}

bool check_certificate(const Matrix& a, const PowerCertificate& cert) {
  if (cert.p().size() != a.size())
    throw std::invalid_argument("certificate: length does not match matrix");
  std::vector<double> ap = a.apply(cert.p());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (ap[i] > cert.p()[i] * (1.0 + kFeasibilityRelTol)) return false;
  return true;
}

bool check_certificate(const AffectanceMatrix& a, const PowerCertificate& cert) {
  return check_certificate(a.entries, cert);
}

PerronResult perron_root(const Matrix& a, double tol, std::size_t budget) {
  const std::size_t n = a.size();
  PerronResult r;
  if (n == 0) {
    r.converged = true;
    return r;
  }
  // Iterate on A + I: keeps the iterate strictly positive, so the min/max
  // ratio bounds below stay valid for reducible matrices too.
  std::vector<double> x(n, 1.0);
  for (std::size_t it = 1; it <= budget; ++it) {
    std::vector<double> y = a.apply(x);
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] += x[i];
      double ratio = y[i] / x[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    r.iterations = it;
    r.lower = lo - 1.0;
    r.upper = hi - 1.0;
    r.rho = 0.5 * (r.lower + r.upper);
    double norm = 0.0;
    for (double v : y) norm = std::max(norm, v);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    if (hi - lo <= tol * std::max(1.0, hi)) {
      r.converged = true;
      break;
    }
  }
  r.vec = std::move(x);
  return r;
}

Matrix power_control_matrix(std::span<const int> S, const Instance& inst) {
  Matrix a(S.size());
  const double alpha = inst.alpha();
  const double beta = inst.beta();
  for (std::size_t i = 0; i < S.size(); ++i) {
    double li = inst.link(S[i]).length;
    for (std::size_t j = 0; j < S.size(); ++j) {
      if (i == j) continue;
      double d = link_distance(S[j], S[i], inst);
      if (d == 0.0)
        throw DegenerateDistanceError(
            S[j], S[i], "matrix: links " + std::to_string(S[j]) + " and " +
                            std::to_string(S[i]) + " are at distance zero");
      a.at(i, j) = beta * std::pow(li / d, alpha);
    }
  }
  return a;
}

namespace {

bool try_certificate(const Matrix& a, const std::vector<double>& candidate,
                     std::optional<PowerCertificate>& out) {
  double top = *std::max_element(candidate.begin(), candidate.end());
  if (!(top > 0.0) || !std::isfinite(top)) return false;
  std::vector<double> p(candidate);
  for (double& v : p) {
    v /= top;
    if (!std::isfinite(v) || v < 0.0) return false;
    if (!(v > 0.0)) v = 1e-300;  // strictly positive, negligible weight
  }
  PowerCertificate cert(p);
  if (!check_certificate(a, cert)) return false;
  out = std::move(cert);
  return true;
}

}  // namespace

PcFeasibility pc_feasible_oracle(std::span<const int> S, const Instance& inst) {
  PcFeasibility out;
  if (S.empty()) {
    out.feasible = true;
    out.rho = 0.0;
    out.certificate.reset();
    return out;
  }
  Matrix a = power_control_matrix(S, inst);
  PerronResult pr = perron_root(a);
  out.rho = pr.rho;
  const double gate = 1.0 + kFeasibilityRelTol;
  if (pr.lower > gate) {
    out.feasible = false;  // certified: any certificate would force rho <= gate
    return out;
  }
  // Feasible side: find an explicit certificate.  The Neumann-style fixpoint
  // p = 1 + A*p converges whenever rho < 1 and its limit satisfies
  // A*p = p - 1 <= p; near the boundary fall back to the Perron iterate.
  std::vector<double> p(S.size(), 1.0);
  for (std::size_t it = 0; it < 20000; ++it) {
    std::vector<double> next = a.apply(p);
    double change = 0.0;
    double top = 0.0;
    for (std::size_t i = 0; i < S.size(); ++i) {
      next[i] += 1.0;
      change = std::max(change, std::abs(next[i] - p[i]) / next[i]);
      top = std::max(top, next[i]);
    }
    p.swap(next);
    if (change <= 1e-15 || top > 1e100) break;
  }
  if (try_certificate(a, p, out.certificate) ||
      try_certificate(a, pr.vec, out.certificate)) {
    out.feasible = true;
    return out;
  }
  if (pr.converged) {
    // Spectral radius is resolved; without a positive certificate at the
    // boundary the set is not simultaneously feasible.
    out.feasible = false;
    return out;
  }
  throw OracleInconclusiveError(
      "pc_feasible_oracle: iteration budget exhausted with spectral bounds [" +
      std::to_string(pr.lower) + ", " + std::to_string(pr.upper) +
      "] straddling 1 and no verifiable certificate");
}

}  // namespace sinrcap
