#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sinrcap/instance.hpp"
#include "sinrcap/model.hpp"
#include "sinrcap/power.hpp"

namespace sinrcap {

/// Dense square matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return n_; }
  double& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  double row_sum(std::size_t i) const;
  /// Se(M): sum of all entries.
  double total_sum() const;
  /// y = M x.
  std::vector<double> apply(std::span<const double> x) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// Pairwise affectances of a link set: entries(i,j) is the affectance of
/// column link j on row link i, so row sums are incoming affectance sums and
/// the diagonal is zero.  Rows/columns follow the order of `ids`.
struct AffectanceMatrix {
  Matrix entries;
  std::vector<int> ids;
  std::vector<double> c;  // affectance constants, aligned with ids
  PowerAssignment power = PowerAssignment::uniform();
};

/// Throws WeakLinkError if any member of S is weak under p.
AffectanceMatrix build_matrix(std::span<const int> S, const PowerAssignment& p,
                              const Instance& inst);

/// Zero-noise pairwise affectances with every constant pinned to beta:
/// entry (i,j) = beta * (l_i / d_ji)^alpha.  Power-assignment freedom acts on
/// this matrix as a diagonal similarity, which makes it the object the
/// power-control questions are decided on.
Matrix power_control_matrix(std::span<const int> S, const Instance& inst);

/// A positive power/scaling vector certifying A*p <= p.
struct PowerCertificate {
  explicit PowerCertificate(std::vector<double> values);
  const std::vector<double>& p() const { return p_; }

 private:
  std::vector<double> p_;
};

/// Indices of rows with row sum at most gamma*lambda.  Requires
/// Se(M) <= gamma*n; at least (1 - 1/lambda)*n indices are returned.
std::vector<std::size_t> filter_rows(const Matrix& m, double gamma,
                                     double lambda);

struct SymmetryBoundReport {
  bool preconditions_ok = false;
  std::string precondition_failure;
  double se = 0.0;
  bool holds = false;  // Se(M) <= (q+1)*n
};

/// Checks the entry-sum bound Se(M) <= (q+1)*n for a nonnegative
/// q-approximately-symmetric matrix (m_ij <= q*m_ji) scaled so that
/// M*p <= p.  Precondition failures are reported in the result, not thrown.
SymmetryBoundReport check_approx_symmetric_bound(const Matrix& m,
                                                 const PowerCertificate& cert,
                                                 double q);

/// True iff (A*p)_i <= p_i * (1 + kFeasibilityRelTol) for every i.
bool check_certificate(const Matrix& a, const PowerCertificate& cert);
bool check_certificate(const AffectanceMatrix& a, const PowerCertificate& cert);

/// Certified bounds on the spectral radius of a nonnegative matrix, from
/// power iteration on A + I with an all-ones start.  `lower`/`upper` come
/// from the final iterate's min/max Rayleigh-like ratios and always bracket
/// the true spectral radius; `converged` means their gap closed to tol.
struct PerronResult {
  double rho = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::vector<double> vec;
  std::size_t iterations = 0;
  bool converged = false;
};

PerronResult perron_root(const Matrix& a, double tol = 1e-10,
                         std::size_t budget = 100000);

struct PcFeasibility {
  bool feasible = false;
  double rho = 0.0;  // best available spectral radius estimate
  std::optional<PowerCertificate> certificate;
};

/// Is S simultaneously feasible under *some* power assignment?  Decided via
/// the spectral radius of the zero-noise, beta-scaled affectance matrix;
/// every feasible answer carries a verified certificate, every infeasible
/// answer a certified spectral lower bound > 1.  Throws
/// OracleInconclusiveError when the iteration budget cannot separate the
/// decision.
PcFeasibility pc_feasible_oracle(std::span<const int> S, const Instance& inst);

}  // namespace sinrcap
