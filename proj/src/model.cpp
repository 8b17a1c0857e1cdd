#include "sinrcap/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "sinrcap/errors.hpp"

namespace sinrcap {

double link_distance(int u, int v, const Instance& inst) {
  const Link& lu = inst.link(u);
  const Link& lv = inst.link(v);
  if (u == v) return lu.length;
  const MetricSpace& m = inst.metric();
  double sr = m.distance(lu.sender, lv.receiver);
  if (inst.mode() == Mode::uni) return sr;
  double rs = m.distance(lv.sender, lu.receiver);
  double ss = m.distance(lu.sender, lv.sender);
  double rr = m.distance(lu.receiver, lv.receiver);
  return std::min(std::min(sr, rs), std::min(ss, rr));
}

std::vector<int> LinkTerms::weak_ids() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < weak.size(); ++i)
    if (weak[i]) out.push_back(static_cast<int>(i));
  return out;
}

LinkTerms link_terms(const PowerAssignment& p, const Instance& inst) {
  LinkTerms t;
  t.power = resolved_powers(p, inst);
  t.c.resize(inst.n(), 0.0);
  t.weak.resize(inst.n(), 0);
  for (const Link& l : inst.links()) {
    double noise_share = inst.beta() * inst.noise() *
                         std::pow(l.length, inst.alpha()) / t.power[l.id];
    if (noise_share >= 1.0) {
      t.weak[l.id] = 1;
    } else {
      t.c[l.id] = inst.beta() / (1.0 - noise_share);
    }
  }
  return t;
}

namespace {

double affectance_from_terms(int w, int v, const LinkTerms& t,
                             const Instance& inst) {
  if (w == v) return 0.0;
  if (t.weak[v])
    throw WeakLinkError(
        v, "model: link " + std::to_string(v) +
               " is weak (its power cannot clear the noise floor)");
  double d = link_distance(w, v, inst);
  if (d == 0.0)
    throw DegenerateDistanceError(
        w, v, "model: links " + std::to_string(w) + " and " + std::to_string(v) +
                  " are at distance zero");
  double lv = inst.link(v).length;
  return t.c[v] * (t.power[w] / t.power[v]) * std::pow(lv / d, inst.alpha());
}

}  // namespace

double affectance(int w, int v, const PowerAssignment& p, const Instance& inst) {
  inst.link(w);  // validate ids before doing any work
  inst.link(v);
  return affectance_from_terms(w, v, link_terms(p, inst), inst);
}

double in_affectance_sum(int v, std::span<const int> S,
                         const PowerAssignment& p, const Instance& inst) {
  LinkTerms t = link_terms(p, inst);
  double sum = 0.0;
  for (int w : S) {
    inst.link(w);
    sum += affectance_from_terms(w, v, t, inst);
  }
  return sum;
}

double out_affectance_sum(int v, std::span<const int> S,
                          const PowerAssignment& p, const Instance& inst) {
  LinkTerms t = link_terms(p, inst);
  double sum = 0.0;
  for (int w : S) {
    inst.link(w);
    sum += affectance_from_terms(v, w, t, inst);
  }
  return sum;
}

FeasibilityReport is_feasible(std::span<const int> S, const PowerAssignment& p,
                              const Instance& inst, SignalStrength delta) {
  if (!(delta.delta >= 1.0))
    throw std::invalid_argument("model: signal strength must be at least 1");
  LinkTerms t = link_terms(p, inst);
  FeasibilityReport r;
  for (int v : S)
    if (t.weak[inst.link(v).id]) r.weak_links.push_back(v);
  if (!r.weak_links.empty()) {
    r.feasible = false;
    r.worst_link = r.weak_links.front();
    r.worst_affectance = std::numeric_limits<double>::infinity();
    return r;
  }
  const double budget = (1.0 / delta.delta) * (1.0 + kFeasibilityRelTol);
  r.feasible = true;
  for (int v : S) {
    double sum = 0.0;
    for (int w : S) sum += affectance_from_terms(w, v, t, inst);
    if (sum > r.worst_affectance) {
      r.worst_affectance = sum;
      r.worst_link = v;
    }
    if (sum > budget) r.feasible = false;
  }
  return r;
}

}  // namespace sinrcap
