#include "sinrcap/power.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sinrcap {

PowerAssignment PowerAssignment::explicit_powers(std::vector<double> powers) {
  if (powers.empty())
    throw std::invalid_argument("power: explicit assignment needs at least one value");
  for (std::size_t i = 0; i < powers.size(); ++i)
    if (!(powers[i] > 0.0) || !std::isfinite(powers[i]))
      throw std::invalid_argument("power: explicit power " + std::to_string(i) +
                                  " must be positive and finite");
  PowerAssignment p(PowerKind::explicit_powers);
  p.powers_ = std::move(powers);
  return p;
}

PowerAssignment PowerAssignment::with_scale(double s) const {
  if (!(s > 0.0) || !std::isfinite(s))
    throw std::invalid_argument("power: scale must be positive and finite");
  PowerAssignment out = *this;
  out.scale_ = s;
  return out;
}

double PowerAssignment::power(const Link& link, double alpha) const {
  switch (kind_) {
    case PowerKind::uniform:
      return scale_;
    case PowerKind::mean:
      return scale_ * std::pow(link.length, alpha / 2.0);
    case PowerKind::linear:
      return scale_ * std::pow(link.length, alpha);
    case PowerKind::explicit_powers:
      if (link.id < 0 || static_cast<std::size_t>(link.id) >= powers_.size())
        throw std::invalid_argument("power: no explicit power for link id " +
                                    std::to_string(link.id));
      return scale_ * powers_[static_cast<std::size_t>(link.id)];
  }
  throw std::logic_error("power: unreachable");
}

std::vector<double> resolved_powers(const PowerAssignment& p,
                                    const Instance& inst) {
  std::vector<double> out;
  out.reserve(inst.n());
  for (const Link& l : inst.links()) out.push_back(p.power(l, inst.alpha()));
  return out;
}

bool is_length_monotone_sublinear(const PowerAssignment& p,
                                  const Instance& inst) {
  // The oblivious kinds satisfy both properties by their formulas; only
  // explicit assignments need the pairwise check.
  if (p.is_oblivious()) return true;
  const auto pw = resolved_powers(p, inst);
  const auto& links = inst.links();
  const double alpha = inst.alpha();
  for (std::size_t u = 0; u < links.size(); ++u)
    for (std::size_t v = 0; v < links.size(); ++v) {
      if (links[u].length > links[v].length) continue;
      if (pw[u] > pw[v]) return false;  // monotone
      double du = pw[u] / std::pow(links[u].length, alpha);
      double dv = pw[v] / std::pow(links[v].length, alpha);
      if (du < dv) return false;  // sub-linear
    }
  return true;
}

PowerAssignment scale_power_for_noise(const PowerAssignment& p,
                                      const Instance& inst) {
  if (!p.is_oblivious())
    throw std::invalid_argument(
        "power: noise scaling applies to oblivious assignments only");
  double s = 1.0;
  for (const Link& l : inst.links()) {
    double base = p.power(l, inst.alpha()) / p.scale();
    double need =
        2.0 * inst.beta() * inst.noise() * std::pow(l.length, inst.alpha()) / base;
    s = std::max(s, need);
  }
  return p.with_scale(s);
}

}  // namespace sinrcap
