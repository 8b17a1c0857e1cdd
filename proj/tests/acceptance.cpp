// Acceptance gate: ten numbered end-to-end checks across the library, each
// printing exactly one pass/fail line.  Run everything, or a single check
// with --criterion N.  The exit status is 0 iff every executed check passed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sinrcap/capacity.hpp"
#include "sinrcap/errors.hpp"
#include "sinrcap/instances.hpp"
#include "sinrcap/matrix.hpp"
#include "sinrcap/model.hpp"
#include "sinrcap/oracle.hpp"
#include "sinrcap/scheduling.hpp"
#include "test_helpers.hpp"

using namespace sinrcap;

namespace {

struct Outcome {
  bool pass = true;
  std::string details;
};

Outcome fail(const std::string& details) { return {false, details}; }

const double kAlphas[4] = {1.5, 2.0, 3.0, 5.0};

// The shared instance schedule for the soundness checks: n spread over
// 2..60, all four path-loss exponents, both modes, every fifth one noisy.
Instance soundness_instance(std::size_t i) {
  std::size_t n = 2 + (13 * i) % 59;
  double alpha = kAlphas[i % 4];
  Mode mode = (i / 4) % 2 ? Mode::bi : Mode::uni;
  double noise = (i % 5 == 0) ? 0.05 : 0.0;
  return gen_random_euclidean({n, 40.0, 1.0, 3.0, i, alpha, 1.0, noise, mode});
}

CapacityResult pc_run(const Instance& inst) {
  return inst.mode() == Mode::uni ? algorithm_pc(inst)
                                  : bidirectional_pc_capacity(inst);
}

// --- 1: every produced set and slot re-passes the feasibility check -------

Outcome criterion1() {
  std::size_t sets = 0, slots = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    Instance inst = soundness_instance(i);
    std::ostringstream at;
    at << "instance " << i << " (n=" << inst.n() << ")";

    for (PowerAssignment p : {PowerAssignment::uniform(), PowerAssignment::mean(),
                              PowerAssignment::linear()}) {
      CapacityResult r = algorithm_c(inst, p);
      if (!is_feasible(r.output, p, inst).feasible)
        return fail("greedy output infeasible on " + at.str());
      ++sets;
    }
    CapacityResult pcr = pc_run(inst);
    if (!is_feasible(pcr.output, pcr.power, inst).feasible)
      return fail("power-control output infeasible on " + at.str());
    ++sets;

    PowerAssignment uni = PowerAssignment::uniform();
    Schedule plans[3] = {
        schedule_first_fit(inst, uni),
        schedule_repeated_capacity(inst, ScheduleRegime::fixed(uni)),
        schedule_repeated_capacity(inst, inst.mode() == Mode::uni
                                             ? ScheduleRegime::pc_uni()
                                             : ScheduleRegime::pc_bi())};
    for (const Schedule& s : plans)
      for (std::size_t t = 0; t < s.slots.size(); ++t) {
        if (!is_feasible(s.slots[t], s.slot_powers[t], inst).feasible)
          return fail("schedule slot infeasible on " + at.str());
        ++slots;
      }
  }
  std::ostringstream d;
  d << sets << " capacity sets and " << slots
    << " schedule slots re-verified feasible on 1000 instances";
  return {true, d.str()};
}

// --- 2: the half bound |X| >= (1 - gamma)|S| on every capacity run --------

Outcome criterion2() {
  std::size_t runs = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    Instance inst = soundness_instance(i);
    for (PowerAssignment p : {PowerAssignment::uniform(), PowerAssignment::mean(),
                              PowerAssignment::linear()}) {
      CapacityResult r = algorithm_c(inst, p);
      if (2 * r.output.size() < r.selected.size())
        return fail("half bound violated by the greedy on instance " +
                    std::to_string(i));
      ++runs;
    }
    CapacityResult pcr = pc_run(inst);
    if (2 * pcr.output.size() < pcr.selected.size())
      return fail("half bound violated by power control on instance " +
                  std::to_string(i));
    ++runs;
  }
  return {true, "|X| >= |S|/2 held exactly on all " + std::to_string(runs) +
                    " capacity runs"};
}

// --- 3: greedy vs the exhaustive fixed-power optimum ----------------------

Outcome criterion3() {
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < 300; ++t) {
    std::size_t n = 2 + t % 11;
    Instance inst = gen_random_euclidean(
        {n, 30.0, 1.0, 3.0, 5000 + t, kAlphas[t % 4], 1.0, 0.0, Mode::uni});
    for (PowerAssignment p : {PowerAssignment::uniform(), PowerAssignment::mean(),
                              PowerAssignment::linear()}) {
      std::size_t x = algorithm_c(inst, p).output.size();
      std::size_t opt = opt_fixed(inst, p).opt;
      if (8 * x < opt)
        return fail("ratio gate broken on instance " + std::to_string(t));
      if (opt > 0) worst = std::min(worst, static_cast<double>(x) / opt);
    }
  }
  std::ostringstream d;
  d << "900 greedy-vs-oracle runs stayed within the x8 gate; worst |X|/opt = "
    << worst;
  return {true, d.str()};
}

// --- 4: gadget feasible subsets = independent sets, exhaustively ----------

Outcome criterion4() {
  std::size_t subsets = 0;
  for (std::size_t g = 0; g < 50; ++g) {
    std::mt19937_64 gen(g);
    const std::size_t n = 3 + g % 7;
    GadgetParams gp;
    gp.vertices = n;
    gp.alpha = std::log2(static_cast<double>(n)) + 1.0;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (int i = 0; i < static_cast<int>(n); ++i)
      for (int j = i + 1; j < static_cast<int>(n); ++j)
        if (gen() & 1) {
          gp.edges.push_back({i, j});
          adj[i][j] = adj[j][i] = 1;
        }
    Instance inst = gen_gadget(gp);
    PowerAssignment p = PowerAssignment::uniform();

    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> subset;
      bool independent = true;
      for (std::size_t v = 0; v < n; ++v) {
        if (!(mask >> v & 1)) continue;
        for (int w : subset) independent = independent && !adj[v][w];
        subset.push_back(static_cast<int>(v));
      }
      if (is_feasible(subset, p, inst).feasible != independent)
        return fail("equivalence broken on graph " + std::to_string(g) +
                    " mask " + std::to_string(mask));
      ++subsets;
    }
  }
  return {true, std::to_string(subsets) +
                    " subsets matched feasible <=> independent exactly"};
}

// --- 5: the shipped scaling vector certifies the hub family ---------------

Outcome criterion5() {
  const double tol = 1.0 + 1e-9;
  for (int K = 1; K <= 6; ++K) {
    LowerBoundInstance lb = gen_lower_bound({K, 14.0, 2.0});
    Matrix a = power_control_matrix(lb.instance.all_ids(), lb.instance);
    if (!check_certificate(a, lb.certificate))
      return fail("certificate rejected at K=" + std::to_string(K));
    std::vector<double> ap = a.apply(lb.certificate.p());
    for (std::size_t i = 0; i < ap.size(); ++i) {
      double budget = lb.group[i] > 0 ? 0.5 * lb.certificate.p()[i]
                                      : lb.certificate.p()[i];
      if (ap[i] > budget * tol)
        return fail("per-link bound broken at K=" + std::to_string(K) +
                    " link " + std::to_string(i));
    }
  }
  return {true, "certificates verified for K=1..6 with half-budget slack on "
                "every ring link"};
}

// --- 6: scheduling gap on the hub family -----------------------------------

Outcome criterion6() {
  std::ostringstream ffs, reps;
  bool increasing_ff = true, increasing_rep = true, pc_one_slot = true;
  std::size_t prev_ff = 0, prev_rep = 0;
  PowerAssignment uni = PowerAssignment::uniform();
  for (int K = 2; K <= 6; ++K) {
    LowerBoundInstance lb = gen_lower_bound({K, 14.0, 2.0});
    std::size_t ff = schedule_first_fit(lb.instance, uni).slots.size();
    std::size_t rep =
        schedule_repeated_capacity(lb.instance, ScheduleRegime::fixed(uni))
            .slots.size();
    increasing_ff = increasing_ff && ff > prev_ff;
    increasing_rep = increasing_rep && rep > prev_rep;
    prev_ff = ff;
    prev_rep = rep;
    ffs << (K > 2 ? "," : "") << ff;
    reps << (K > 2 ? "," : "") << rep;

    PcFeasibility pf =
        pc_feasible_oracle(lb.instance.all_ids(), lb.instance);
    pc_one_slot = pc_one_slot && pf.feasible && pf.certificate.has_value();
  }
  std::ostringstream d;
  d << "uniform slot counts for K=2..6: first_fit [" << ffs.str()
    << "], repeated [" << reps.str() << "]"
    << (increasing_ff && increasing_rep ? ", strictly increasing"
                                        : ", NOT strictly increasing")
    << "; power control certified the whole set at every K: "
    << (pc_one_slot ? "yes" : "NO");
  return {increasing_ff && increasing_rep && pc_one_slot, d.str()};
}

// --- 7: row-filter cardinality and approximate-symmetry sum bounds --------

Outcome criterion7() {
  std::mt19937_64 gen(1234);
  auto unit = [&] { return std::uniform_real_distribution<double>(0.0, 1.0)(gen); };

  for (std::size_t t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + gen() % 19;
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) m.at(i, j) = 2.0 * unit();
    const std::size_t lambda = t % 2 ? 2 : 4;
    const double gamma = (m.total_sum() + 1.0) / static_cast<double>(n);
    std::size_t kept = filter_rows(m, gamma, static_cast<double>(lambda)).size();
    if (lambda * kept < (lambda - 1) * n)
      return fail("row filter kept too few rows on matrix " +
                  std::to_string(t));
  }

  for (std::size_t t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + gen() % 19;
    Matrix m(n);
    std::vector<double> p(n);
    for (double& v : p) v = 0.5 + 1.5 * unit();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        double base = 0.01 + unit();
        m.at(i, j) = base * (0.25 + 0.75 * unit());
        m.at(j, i) = base * (0.25 + 0.75 * unit());
      }
    // Scale down so that the vector p genuinely dominates M p.
    double r = 0.0;
    std::vector<double> mp = m.apply(p);
    for (std::size_t i = 0; i < n; ++i) r = std::max(r, mp[i] / p[i]);
    const double shrink = r * (1.0 + 1e-12);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) m.at(i, j) /= shrink;
    double q = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) q = std::max(q, m.at(i, j) / m.at(j, i));
    SymmetryBoundReport rep =
        check_approx_symmetric_bound(m, PowerCertificate(p), q);
    if (!rep.preconditions_ok)
      return fail("generated matrix rejected (" + rep.precondition_failure +
                  ") on trial " + std::to_string(t));
    if (!rep.holds)
      return fail("entry-sum bound broken on matrix " + std::to_string(t));
  }
  return {true, "row-filter bound and entry-sum bound exact on 1000 random "
                "matrices each"};
}

// --- 8: the red-blue witness exists on every generated fixture ------------

Outcome criterion8() {
  std::size_t fixtures = 0;
  for (double alpha : {2.0, 3.0}) {
    for (std::size_t t = 0; t < 200; ++t) {
      std::size_t nr = 1 + t % 3;
      std::size_t nb = 4 * nr + 1 + t % 5;
      RedBlueFixture f = gen_red_blue_fixture({nr, nb, alpha, 9000 + t});
      if (!testutil::red_blue_witness(f)) {
        std::ostringstream d;
        d << "no witness in fixture alpha=" << alpha << " red=" << nr
          << " blue=" << nb << " seed=" << 9000 + t;
        return fail(d.str());
      }
      ++fixtures;
    }
  }
  return {true, "witness link found in all " + std::to_string(fixtures) +
                    " fixtures (200 per path-loss exponent)"};
}

// --- 9: strengthening splits within the guaranteed group counts -----------

Outcome criterion9() {
  std::size_t sets = 0;
  for (std::size_t t = 0; t < 200; ++t) {
    std::size_t n = 4 + t % 27;
    Mode mode = t % 2 ? Mode::bi : Mode::uni;
    Instance inst = gen_random_euclidean(
        {n, 40.0, 1.0, 3.0, 7000 + t, kAlphas[t % 4], 1.0, 0.0, mode});
    PowerAssignment p = PowerAssignment::uniform();
    std::vector<int> X = algorithm_c(inst, p).output;

    for (double delta : {2.0, 4.0}) {
      auto groups = signal_strengthen(inst, X, p, {1.0}, {delta});
      std::size_t bound = static_cast<std::size_t>(
          std::ceil((mode == Mode::uni ? 4.0 : 8.0) * delta));
      if (groups.size() > bound)
        return fail("group count above the guarantee on instance " +
                    std::to_string(t));
      std::size_t covered = 0;
      for (const auto& g : groups) {
        if (!is_feasible(g, p, inst, {delta}).feasible)
          return fail("group misses the strength target on instance " +
                      std::to_string(t));
        covered += g.size();
      }
      if (covered != X.size())
        return fail("groups do not partition the set on instance " +
                    std::to_string(t));
    }
    ++sets;
  }
  return {true, "200 feasible sets split into delta-signal groups within "
                "the count guarantees for delta in {2, 4}"};
}

// --- 10: fixed mean power vs full power control on bidirectional inputs ---

Outcome criterion10() {
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < 200; ++t) {
    std::size_t n = 2 + t % 9;
    Instance inst = gen_random_euclidean(
        {n, 30.0, 1.0, 3.0, 11000 + t, kAlphas[t % 4], 1.0, 0.0, Mode::bi});
    std::size_t opt_mean = opt_fixed(inst, PowerAssignment::mean()).opt;
    std::size_t opt_any = opt_pc(inst).opt;
    if (16 * opt_mean < opt_any)
      return fail("mean power fell below the x16 gate on instance " +
                  std::to_string(t));
    if (opt_any > 0)
      worst = std::min(worst, static_cast<double>(opt_mean) / opt_any);
  }
  std::ostringstream d;
  d << "200 bidirectional instances stayed within the x16 gate; worst "
       "opt_mean/opt_pc = "
    << worst;
  return {true, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  int which = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      which = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  if (which < 0 || which > 10) {
    std::fprintf(stderr, "criterion must be 1..10\n");
    return 2;
  }

  using Check = Outcome (*)();
  const Check checks[10] = {criterion1, criterion2, criterion3, criterion4,
                            criterion5, criterion6, criterion7, criterion8,
                            criterion9, criterion10};
  bool all_pass = true;
  for (int k = 1; k <= 10; ++k) {
    if (which != 0 && which != k) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o = checks[k - 1]();
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::printf("criterion %02d: %s - %s (%.1fs)\n", k,
                o.pass ? "PASS" : "FAIL", o.details.c_str(), secs);
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
