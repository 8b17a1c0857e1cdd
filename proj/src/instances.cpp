#include "sinrcap/instances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "sinrcap/errors.hpp"
#include "sinrcap/model.hpp"

namespace sinrcap {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// Seeded helper producing doubles in [0, 1) from the top 53 bits of a
/// mt19937_64 draw, so a fixed seed replays the exact same stream.
struct Rand {
  std::mt19937_64 gen;

  explicit Rand(std::uint64_t seed) : gen(seed) {}

  double unit() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
  double range(double lo, double hi) { return lo + unit() * (hi - lo); }
};

}  // namespace

LowerBoundInstance gen_lower_bound(const LowerBoundParams& params) {
  if (params.K < 1 || params.K > 7)
    throw std::invalid_argument("gen_lower_bound: K must be in [1, 7]");
  if (!(params.gamma_lb > 0.0) || !(params.alpha > 0.0))
    throw std::invalid_argument("gen_lower_bound: gamma_lb and alpha must be positive");

  // Per-link hub distance rho and ring index.  Ring k holds 4^(k-1) links.
  std::vector<double> rho{0.0};
  std::vector<int> group{0};
  std::vector<double> cert{1.0};
  for (int k = 1; k <= params.K; ++k) {
    const std::size_t size = std::size_t{1} << (2 * (k - 1));
    const double r = std::pow(params.gamma_lb * static_cast<double>(size),
                              1.0 / params.alpha);
    const double p = std::ldexp(1.0, -k);
    rho.insert(rho.end(), size, r);
    group.insert(group.end(), size, k);
    cert.insert(cert.end(), size, p);
  }
  const std::size_t n = rho.size();

  // The stated constraints are d(s_i, r_i) = 1 and d(s_i, r_j) = rho_i +
  // rho_j.  In the shortest-path closure a cross pair with no stated edge
  // routes through some third receiver/sender, adding 2 * rho_m for the best
  // detour link m, or pays 1 to hop across a link pair.  The closure only
  // preserves the unit link lengths if no two-detour path beats them.
  double a1 = std::numeric_limits<double>::infinity(), a2 = a1;
  if (n >= 2) a1 = rho[1];
  if (n >= 3) a2 = rho[2];
  if (n >= 3 && 2.0 * (a1 + a2) < 1.0)
    throw std::invalid_argument(
        "gen_lower_bound: gamma_lb too small, the metric closure would "
        "shorten the unit links");

  // Smallest three rho values with owners, to answer min over m != i, j.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::partial_sort(order.begin(), order.begin() + std::min<std::size_t>(3, n),
                    order.end(),
                    [&](std::size_t a, std::size_t b) { return rho[a] < rho[b]; });
  const auto min_rho_excl = [&](std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < std::min<std::size_t>(3, n); ++t)
      if (order[t] != i && order[t] != j) return rho[order[t]];
    return std::numeric_limits<double>::infinity();
  };

  // Points: sender of link i at 2i, receiver at 2i + 1.
  std::vector<std::vector<double>> dist(2 * n, std::vector<double>(2 * n, 0.0));
  const auto set = [&](std::size_t a, std::size_t b, double d) {
    dist[a][b] = d;
    dist[b][a] = d;
  };
  for (std::size_t i = 0; i < n; ++i) {
    set(2 * i, 2 * i + 1, 1.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double cross = rho[i] + rho[j];
      const double same = cross + std::min(1.0, 2.0 * min_rho_excl(i, j));
      set(2 * i, 2 * j + 1, cross);
      set(2 * j, 2 * i + 1, cross);
      set(2 * i, 2 * j, same);
      set(2 * i + 1, 2 * j + 1, same);
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> endpoints;
  endpoints.reserve(n);
  for (std::size_t i = 0; i < n; ++i) endpoints.emplace_back(2 * i, 2 * i + 1);

  Instance inst(MetricSpace::from_matrix(dist), endpoints, params.alpha,
                /*beta=*/1.0, /*noise=*/0.0, Mode::uni);
  PowerCertificate certificate(cert);
  PowerAssignment power = PowerAssignment::explicit_powers(cert);
  return LowerBoundInstance{std::move(inst), std::move(certificate),
                            std::move(power), std::move(group)};
}

Instance gen_gadget(const GadgetParams& params) {
  const std::size_t n = params.vertices;
  if (n == 0) throw std::invalid_argument("gen_gadget: vertices must be >= 1");
  const double min_alpha = std::log2(static_cast<double>(n)) + 1.0;
  if (!(params.alpha >= min_alpha))
    throw std::invalid_argument(
        "gen_gadget: alpha must be at least lg(vertices) + 1 = " +
        std::to_string(min_alpha));

  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : params.edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
        static_cast<std::size_t>(v) >= n || u == v)
      throw std::invalid_argument("gen_gadget: bad edge (" +
                                  std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    adj[u][v] = adj[v][u] = 1;
  }

  // One unit link per vertex; every distance between the point pairs of two
  // different vertices is 1 when adjacent and 2 when not, so all triangle
  // sums close and feasibility collapses to independence in the graph.
  std::vector<std::vector<double>> dist(2 * n, std::vector<double>(2 * n, 0.0));
  for (std::size_t u = 0; u < n; ++u) {
    dist[2 * u][2 * u + 1] = dist[2 * u + 1][2 * u] = 1.0;
    for (std::size_t v = u + 1; v < n; ++v) {
      const double d = adj[u][v] ? 1.0 : 2.0;
      for (std::size_t a = 2 * u; a <= 2 * u + 1; ++a)
        for (std::size_t b = 2 * v; b <= 2 * v + 1; ++b)
          dist[a][b] = dist[b][a] = d;
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> endpoints;
  endpoints.reserve(n);
  for (std::size_t i = 0; i < n; ++i) endpoints.emplace_back(2 * i, 2 * i + 1);
  return Instance(MetricSpace::from_matrix(dist), endpoints, params.alpha,
                  /*beta=*/1.5, /*noise=*/0.0, Mode::uni);
}

Instance gen_random_euclidean(const RandomEuclideanParams& params) {
  if (params.n == 0)
    throw std::invalid_argument("gen_random_euclidean: n must be >= 1");
  if (!(params.region_size > 0.0))
    throw std::invalid_argument("gen_random_euclidean: region_size must be positive");
  if (!(params.min_length > 0.0) || !(params.max_length >= params.min_length))
    throw std::invalid_argument(
        "gen_random_euclidean: need 0 < min_length <= max_length");

  Rand rnd(params.seed);
  std::vector<std::vector<double>> points;
  points.reserve(2 * params.n);
  std::vector<std::pair<std::size_t, std::size_t>> endpoints;
  endpoints.reserve(params.n);
  for (std::size_t i = 0; i < params.n; ++i) {
    const double sx = rnd.range(0.0, params.region_size);
    const double sy = rnd.range(0.0, params.region_size);
    const double len = rnd.range(params.min_length, params.max_length);
    const double theta = rnd.range(0.0, 2.0 * kPi);
    points.push_back({sx, sy});
    points.push_back({sx + len * std::cos(theta), sy + len * std::sin(theta)});
    endpoints.emplace_back(2 * i, 2 * i + 1);
  }
  return Instance(MetricSpace::euclidean(2, points), endpoints, params.alpha,
                  params.beta, params.noise, params.mode);
}

RedBlueFixture gen_red_blue_fixture(const RedBlueParams& params) {
  if (params.n_red == 0)
    throw std::invalid_argument("gen_red_blue_fixture: n_red must be >= 1");
  if (params.n_blue <= 4 * params.n_red)
    throw std::invalid_argument(
        "gen_red_blue_fixture: n_blue must exceed 4 * n_red");
  if (!(params.alpha > 0.0))
    throw std::invalid_argument("gen_red_blue_fixture: alpha must be positive");

  const std::size_t nr = params.n_red, nb = params.n_blue;
  const std::size_t m = static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(nb))));
  // Grid pitch coarse enough that blue links (length <= 2) a cell apart keep
  // the whole blue class a 3^alpha-signal set with a wide margin; jitter and
  // receiver placement are then confirmed by an explicit feasibility check.
  const double g =
      8.0 * std::pow(200.0 * static_cast<double>(nb), 1.0 / params.alpha);
  const double side = static_cast<double>(m) * g;
  const double delta = std::pow(3.0, params.alpha);

  Rand rnd(params.seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::vector<double>> points;
    points.reserve(2 * (nr + nb));
    std::vector<std::pair<std::size_t, std::size_t>> endpoints;
    endpoints.reserve(nr + nb);
    const auto add_link = [&](double sx, double sy, double len) {
      const double theta = rnd.range(0.0, 2.0 * kPi);
      const std::size_t base = points.size();
      points.push_back({sx, sy});
      points.push_back({sx + len * std::cos(theta), sy + len * std::sin(theta)});
      endpoints.emplace_back(base, base + 1);
    };

    for (std::size_t i = 0; i < nr; ++i)
      add_link(rnd.range(0.0, side), rnd.range(0.0, side), rnd.range(0.5, 4.0));
    for (std::size_t j = 0; j < nb; ++j) {
      const double cx = static_cast<double>(j % m) * g;
      const double cy = static_cast<double>(j / m) * g;
      add_link(cx + rnd.range(0.0, g / 8.0), cy + rnd.range(0.0, g / 8.0),
               rnd.range(1.0, 2.0));
    }

    Instance inst(MetricSpace::euclidean(2, points), endpoints, params.alpha,
                  /*beta=*/1.0, /*noise=*/0.0, Mode::uni);
    std::vector<int> red(nr), blue(nb);
    for (std::size_t i = 0; i < nr; ++i) red[i] = static_cast<int>(i);
    for (std::size_t j = 0; j < nb; ++j) blue[j] = static_cast<int>(nr + j);
    if (is_feasible(blue, PowerAssignment::uniform(), inst,
                    SignalStrength{delta})
            .feasible)
      return RedBlueFixture{std::move(inst), std::move(red), std::move(blue)};
  }
  throw FixtureError(
      "gen_red_blue_fixture: could not realize a 3^alpha-signal blue class");
}

}  // namespace sinrcap
