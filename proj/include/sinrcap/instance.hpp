#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sinrcap/metric.hpp"

namespace sinrcap {

/// How cross-link distances are measured: uni uses sender-to-receiver only,
/// bi takes the minimum over all four endpoint pairings.
enum class Mode { uni, bi };

struct Link {
  int id;               // position in the instance link list
  std::size_t sender;   // point index
  std::size_t receiver; // point index
  double length;        // d(sender, receiver), cached at construction
};

/// An immutable problem instance: a metric, a list of links between its
/// points, and the model parameters (path loss alpha, SINR threshold beta,
/// ambient noise, distance mode).
class Instance {
 public:
  Instance(MetricSpace metric,
           const std::vector<std::pair<std::size_t, std::size_t>>& endpoints,
           double alpha, double beta, double noise, Mode mode);

  const MetricSpace& metric() const { return metric_; }
  const std::vector<Link>& links() const { return links_; }
  const Link& link(int id) const;
  std::size_t n() const { return links_.size(); }

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double noise() const { return noise_; }
  Mode mode() const { return mode_; }

  /// Length diversity: max link length over min link length (>= 1).
  double length_ratio() const;

  std::vector<int> all_ids() const;

 private:
  MetricSpace metric_;
  std::vector<Link> links_;
  double alpha_, beta_, noise_;
  Mode mode_;
};

}  // namespace sinrcap
