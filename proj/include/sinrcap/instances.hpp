#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sinrcap/instance.hpp"
#include "sinrcap/matrix.hpp"
#include "sinrcap/power.hpp"

namespace sinrcap {

/// Hub-and-rings family: one hub link plus K rings S_1..S_K of unit links,
/// |S_k| = 4^(k-1), ring k at hub distance (gamma_lb * |S_k|)^(1/alpha), and
/// cross distances stated as the sum of the two hub distances.  The point
/// metric is the shortest-path closure of those constraints (computed in
/// closed form; generation asserts that no stated distance is shortened).
/// Ships with the scaling vector p_hub = 1, p_i = 2^-k, which certifies
/// feasibility under power control for gamma_lb >= 7.
struct LowerBoundParams {
  int K = 1;
  double gamma_lb = 14.0;
  double alpha = 2.0;
};

struct LowerBoundInstance {
  Instance instance;
  PowerCertificate certificate;
  PowerAssignment power;   // the certificate as an explicit assignment
  std::vector<int> group;  // ring index per link; 0 for the hub
};

LowerBoundInstance gen_lower_bound(const LowerBoundParams& params);

/// Independent-set gadget: one unit link per vertex, cross distances 1
/// between adjacent vertices and 2 otherwise, beta = 3/2, zero noise.  With
/// alpha >= lg(vertices) + 1 a vertex subset is feasible iff it is
/// independent.
struct GadgetParams {
  std::size_t vertices = 0;
  std::vector<std::pair<int, int>> edges;
  double alpha = 0.0;
};

Instance gen_gadget(const GadgetParams& params);

struct RandomEuclideanParams {
  std::size_t n = 0;
  double region_size = 100.0;
  double min_length = 1.0;
  double max_length = 2.0;
  std::uint64_t seed = 0;
  double alpha = 2.0;
  double beta = 1.0;
  double noise = 0.0;
  Mode mode = Mode::uni;
};

/// Plane instance with seeded senders uniform in the square and receivers at
/// a uniform angle and length.  The same seed reproduces the instance bit
/// for bit.
Instance gen_random_euclidean(const RandomEuclideanParams& params);

/// Two-class fixture for the red/blue comparison properties: blue links
/// spread on a coarse jittered grid so that blue alone forms a 3^alpha-signal
/// set under uniform power (verified, with resampling), red links scattered
/// through the same region.  Requires n_blue > 4 * n_red.
struct RedBlueParams {
  std::size_t n_red = 0;
  std::size_t n_blue = 0;
  double alpha = 2.0;
  std::uint64_t seed = 0;
};

struct RedBlueFixture {
  Instance instance;
  std::vector<int> red;   // ids [0, n_red)
  std::vector<int> blue;  // ids [n_red, n_red + n_blue)
  PowerAssignment power = PowerAssignment::uniform();
};

RedBlueFixture gen_red_blue_fixture(const RedBlueParams& params);

}  // namespace sinrcap
