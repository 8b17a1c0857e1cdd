#include <doctest.h>

#include <algorithm>
#include <set>
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

TEST_SUITE("oracle") {

TEST_CASE("opt_fixed: singleton") {
  Instance inst = testutil::random_euclid(1, 4);
  OracleResult r = opt_fixed(inst, PowerAssignment::uniform());
  CHECK(r.opt == 1);
  CHECK(r.witness == std::vector<int>{0});
}

TEST_CASE("opt_fixed finds the independence number of a cycle gadget") {
  // The 5-cycle: largest independent set has two vertices, and {0, 2} is the
  // lexicographically first one.
  GadgetParams gp;
  gp.vertices = 5;
  gp.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  gp.alpha = 3.5;
  Instance inst = gen_gadget(gp);
  OracleResult r = opt_fixed(inst, PowerAssignment::uniform());
  CHECK(r.opt == 2);
  CHECK(r.witness == std::vector<int>{0, 2});
}

TEST_CASE("opt_fixed boundary semantics and delta monotonicity") {
  // Unit links at distance 1: a pair's incoming sum is exactly 1 (feasible),
  // a triple's is 2.
  Instance pair = testutil::equidistant_links(2, 1.0, 2.0);
  PowerAssignment p = PowerAssignment::uniform();
  CHECK(opt_fixed(pair, p).opt == 2);
  CHECK(opt_fixed(pair, p, {2.0}).opt == 1);  // 2-signal budget is 1/2

  Instance blockers = testutil::equidistant_links(3, 0.9, 2.0);
  CHECK(opt_fixed(blockers, p).opt == 1);
  CHECK(opt_fixed(blockers, p).witness == std::vector<int>{0});
}

TEST_CASE("opt_fixed shrinks boundedly when the signal requirement grows") {
  // Any feasible optimum splits into at most 4*delta (uni) or 8*delta (bi)
  // delta-signal groups, so the delta-constrained optimum keeps at least that
  // fraction of the unconstrained one.
  for (int t = 0; t < 200; ++t) {
    Mode mode = (t % 2 == 0) ? Mode::uni : Mode::bi;
    Instance inst = testutil::random_euclid(9 + t % 4, 3000 + t, 2.5, mode);
    PowerAssignment p = PowerAssignment::mean();
    std::size_t base = opt_fixed(inst, p).opt;
    for (double delta : {2.0, 4.0}) {
      std::size_t relaxed = opt_fixed(inst, p, {delta}).opt;
      CHECK(relaxed <= base);
      double factor = (mode == Mode::uni ? 4.0 : 8.0) * delta;
      CHECK(static_cast<double>(relaxed) * factor >=
            static_cast<double>(base) * (1 - 1e-12));
    }
  }
}

TEST_CASE("opt_fixed dominates the greedy and validates inputs") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Instance inst = testutil::random_euclid(12, seed);
    PowerAssignment p = PowerAssignment::mean();
    OracleResult r = opt_fixed(inst, p);
    CHECK(r.opt >= algorithm_c(inst, p).output.size());
    CHECK(r.witness.size() == r.opt);
    CHECK(is_feasible(r.witness, p, inst).feasible);
    CHECK(r.evaluated > 0);
  }

  Instance big = testutil::random_euclid(17, 0);
  CHECK_THROWS_AS(opt_fixed(big, PowerAssignment::uniform()), CapExceededError);
  Instance small = testutil::random_euclid(3, 0);
  CHECK_THROWS_AS(opt_fixed(small, PowerAssignment::uniform(), {0.5}),
                  std::invalid_argument);
}

TEST_CASE("opt_fixed skips weak links") {
  Instance inst = testutil::spread_line({1.0, 1.0, 2.0}, 2.0, Mode::uni, 0.5);
  OracleResult r = opt_fixed(inst, PowerAssignment::uniform());
  CHECK(r.opt == 2);
  CHECK(r.witness == std::vector<int>{0, 1});
}

TEST_CASE("opt_pc: singleton with a verified certificate") {
  Instance inst = testutil::random_euclid(1, 8);
  OracleResult r = opt_pc(inst);
  CHECK(r.opt == 1);
  REQUIRE(r.certificate.has_value());
  Matrix a = power_control_matrix(r.witness, inst);
  CHECK(check_certificate(a, *r.certificate));
}

TEST_CASE("opt_pc certifies a whole certified family") {
  LowerBoundInstance lb = gen_lower_bound({2, 14.0, 2.0});
  OracleResult r = opt_pc(lb.instance);
  CHECK(r.opt == lb.instance.n());
  CHECK(r.witness == lb.instance.all_ids());
  REQUIRE(r.certificate.has_value());
  Matrix a = power_control_matrix(r.witness, lb.instance);
  CHECK(check_certificate(a, *r.certificate));
}

TEST_CASE("opt_pc rejects a pair beyond power control") {
  // Cross distance 1/sqrt(2) at alpha = 2: both cross gains are 2, the
  // product is 4 > 1, so no power assignment saves the pair.
  Instance inst = testutil::equidistant_links(2, 0.7071067811865476, 2.0);
  OracleResult r = opt_pc(inst);
  CHECK(r.opt == 1);
  CHECK(r.witness == std::vector<int>{0});
}

TEST_CASE("opt_pc dominates every oblivious fixed assignment") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Instance inst = testutil::random_euclid(8, seed);
    OracleResult pc = opt_pc(inst);
    for (PowerAssignment p : {PowerAssignment::uniform(), PowerAssignment::mean(),
                              PowerAssignment::linear()})
      CHECK(pc.opt >= opt_fixed(inst, p).opt);
    REQUIRE(pc.certificate.has_value());
    Matrix a = power_control_matrix(pc.witness, inst);
    CHECK(check_certificate(a, *pc.certificate));
  }

  Instance big = testutil::random_euclid(17, 1);
  CHECK_THROWS_AS(opt_pc(big), CapExceededError);
}

TEST_CASE("min_schedule: exact slot counts on engineered instances") {
  Instance pair = testutil::equidistant_links(2, 1.0, 2.0);
  PowerAssignment p = PowerAssignment::uniform();
  MinScheduleResult r = min_schedule(pair, p);
  CHECK(r.slots == 1);
  REQUIRE(r.witness.size() == 1);
  CHECK(r.witness[0] == std::vector<int>{0, 1});

  Instance blockers = testutil::equidistant_links(3, 0.9, 2.0);
  CHECK(min_schedule(blockers, p).slots == 3);
}

TEST_CASE("min_schedule: a certified family is one uniform slot") {
  LowerBoundInstance lb = gen_lower_bound({2, 14.0, 2.0});
  MinScheduleResult r = min_schedule(lb.instance, PowerAssignment::uniform());
  CHECK(r.slots == 1);
}

TEST_CASE("min_schedule lower-bounds both schedulers") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Instance inst = testutil::random_euclid(9, seed);
    PowerAssignment p = PowerAssignment::uniform();
    MinScheduleResult r = min_schedule(inst, p);
    CHECK(r.slots >= 1);
    CHECK(r.slots <= schedule_first_fit(inst, p).slots.size());
    CHECK(r.slots <=
          schedule_repeated_capacity(inst, ScheduleRegime::fixed(p)).slots.size());

    // The witness is a partition into feasible slots of the stated size.
    CHECK(r.witness.size() == r.slots);
    std::vector<int> all;
    for (const auto& slot : r.witness) {
      CHECK(is_feasible(slot, p, inst).feasible);
      all.insert(all.end(), slot.begin(), slot.end());
    }
    std::sort(all.begin(), all.end());
    CHECK(all == inst.all_ids());

    // Deterministic: a second run reproduces the same witness.
    MinScheduleResult again = min_schedule(inst, p);
    CHECK(again.witness == r.witness);
  }
}

TEST_CASE("min_schedule guards: cap and weak links") {
  Instance big = testutil::random_euclid(11, 2);
  CHECK_THROWS_AS(min_schedule(big, PowerAssignment::uniform()),
                  CapExceededError);
  Instance weak = testutil::spread_line({1.0, 2.0}, 2.0, Mode::uni, 0.5);
  CHECK_THROWS_AS(min_schedule(weak, PowerAssignment::uniform()), WeakLinkError);
}

}  // TEST_SUITE
