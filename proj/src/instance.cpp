#include "sinrcap/instance.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sinrcap {

Instance::Instance(
    MetricSpace metric,
    const std::vector<std::pair<std::size_t, std::size_t>>& endpoints,
    double alpha, double beta, double noise, Mode mode)
    : metric_(std::move(metric)),
      alpha_(alpha),
      beta_(beta),
      noise_(noise),
      mode_(mode) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("instance: alpha must be positive");
  if (!(beta >= 1.0) || !std::isfinite(beta))
    throw std::invalid_argument("instance: beta must be at least 1");
  if (!(noise >= 0.0) || !std::isfinite(noise))
    throw std::invalid_argument("instance: noise must be nonnegative");
  links_.reserve(endpoints.size());
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    auto [s, r] = endpoints[i];
    if (s >= metric_.size() || r >= metric_.size())
      throw std::invalid_argument("instance: link " + std::to_string(i) +
                                  " references an unknown point");
    double len = metric_.distance(s, r);
    if (!(len > 0.0))
      throw std::invalid_argument("instance: link " + std::to_string(i) +
                                  " has nonpositive length");
    links_.push_back(Link{static_cast<int>(i), s, r, len});
  }
}

const Link& Instance::link(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= links_.size())
    throw std::invalid_argument("instance: unknown link id " +
                                std::to_string(id));
  return links_[static_cast<std::size_t>(id)];
}

double Instance::length_ratio() const {
  if (links_.empty())
    throw std::logic_error("instance: length ratio of an empty link set");
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const Link& l : links_) {
    lo = std::min(lo, l.length);
    hi = std::max(hi, l.length);
  }
  return hi / lo;
}

std::vector<int> Instance::all_ids() const {
  std::vector<int> ids(links_.size());
  for (std::size_t i = 0; i < links_.size(); ++i) ids[i] = static_cast<int>(i);
  return ids;
}

}  // namespace sinrcap
