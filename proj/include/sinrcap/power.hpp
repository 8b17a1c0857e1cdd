#pragma once

#include <vector>

#include "sinrcap/instance.hpp"

namespace sinrcap {

enum class PowerKind { uniform, mean, linear, explicit_powers };

/// Transmission powers for the links of an instance.  The three oblivious
/// kinds depend only on a link's own length:
///
///   uniform: P_v = scale
///   mean:    P_v = scale * l_v^(alpha/2)
///   linear:  P_v = scale * l_v^alpha
///
/// explicit_powers carries one positive value per link id, also multiplied
/// by scale.
class PowerAssignment {
 public:
  static PowerAssignment uniform() { return PowerAssignment(PowerKind::uniform); }
  static PowerAssignment mean() { return PowerAssignment(PowerKind::mean); }
  static PowerAssignment linear() { return PowerAssignment(PowerKind::linear); }
  static PowerAssignment explicit_powers(std::vector<double> powers);

  PowerKind kind() const { return kind_; }
  double scale() const { return scale_; }
  bool is_oblivious() const { return kind_ != PowerKind::explicit_powers; }
  const std::vector<double>& raw_powers() const { return powers_; }

  /// Same assignment with the scale factor replaced.
  PowerAssignment with_scale(double s) const;

  double power(const Link& link, double alpha) const;

 private:
  explicit PowerAssignment(PowerKind kind) : kind_(kind) {}

  PowerKind kind_;
  double scale_ = 1.0;
  std::vector<double> powers_;  // explicit_powers only, indexed by link id
};

/// P_v for every link of the instance, indexed by link id.
std::vector<double> resolved_powers(const PowerAssignment& p,
                                    const Instance& inst);

/// True iff on every link pair, the longer link gets at least as much power
/// (length-monotone) and at most proportionally-in-l^alpha more power
/// (sub-linear): l_u <= l_v implies P_u <= P_v and P_u/l_u^alpha >= P_v/l_v^alpha.
bool is_length_monotone_sublinear(const PowerAssignment& p,
                                  const Instance& inst);

/// Rescales an oblivious assignment so that the noise term never eats more
/// than half of any link's SINR budget: beta*N*l_v^alpha/P_v <= 1/2 for all
/// v, which caps every affectance constant at c_v <= 2*beta.  With zero
/// noise the scale is 1.
PowerAssignment scale_power_for_noise(const PowerAssignment& p,
                                      const Instance& inst);

}  // namespace sinrcap
