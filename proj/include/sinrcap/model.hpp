#pragma once

#include <span>
#include <vector>

#include "sinrcap/instance.hpp"
#include "sinrcap/power.hpp"

namespace sinrcap {

/// Slack applied to every feasibility comparison: a sum passes the 1/delta
/// budget iff it is at most (1/delta) * (1 + kFeasibilityRelTol).
inline constexpr double kFeasibilityRelTol = 1e-9;

/// Signal strength requirement delta >= 1: a set S is a delta-signal set
/// when every member's incoming affectance sum is at most 1/delta.
/// delta = 1 is plain SINR feasibility.
struct SignalStrength {
  double delta = 1.0;
};

/// Distance from link u's sender to link v's receiver (uni), or the minimum
/// over all four endpoint pairings (bi).  For u == v it is u's own length in
/// either mode.
double link_distance(int u, int v, const Instance& inst);

/// Per-link quantities derived from a power assignment: transmission power,
/// the affectance constant c_v = beta / (1 - beta*N*l_v^alpha / P_v), and a
/// weak flag for links where that denominator is not positive.
struct LinkTerms {
  std::vector<double> power;
  std::vector<double> c;
  std::vector<char> weak;

  std::vector<int> weak_ids() const;
};

LinkTerms link_terms(const PowerAssignment& p, const Instance& inst);

/// Interference of link w on link v, normalized so that v's SINR constraint
/// in a set S reads sum_{w in S} a_w(v) <= 1:
///
///   a_w(v) = c_v * (P_w / P_v) * (l_v / d_wv)^alpha,   a_v(v) = 0.
///
/// Throws WeakLinkError if v is weak and DegenerateDistanceError if w != v
/// but d_wv = 0.
double affectance(int w, int v, const PowerAssignment& p, const Instance& inst);

/// a_S(v) = sum of affectance(w, v) over w in S.
double in_affectance_sum(int v, std::span<const int> S,
                         const PowerAssignment& p, const Instance& inst);

/// a_v(S) = sum of affectance(v, w) over w in S.
double out_affectance_sum(int v, std::span<const int> S,
                          const PowerAssignment& p, const Instance& inst);

struct FeasibilityReport {
  bool feasible = false;
  int worst_link = -1;        // link with the largest incoming sum
  double worst_affectance = 0.0;
  std::vector<int> weak_links;  // members that fail on their own; forces infeasible
};

/// Is S a delta-signal set under p?  Weak members are reported in the
/// result, never thrown.
FeasibilityReport is_feasible(std::span<const int> S, const PowerAssignment& p,
                              const Instance& inst, SignalStrength delta = {});

}  // namespace sinrcap
