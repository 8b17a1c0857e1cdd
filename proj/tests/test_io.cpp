#include <doctest.h>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sinrcap/capacity.hpp"
#include "sinrcap/io.hpp"
#include "sinrcap/matrix.hpp"
#include "sinrcap/model.hpp"
#include "sinrcap/oracle.hpp"
#include "sinrcap/scheduling.hpp"
#include "test_helpers.hpp"

using namespace sinrcap;
using nlohmann::json;

TEST_SUITE("io") {

TEST_CASE("instance json round-trips byte for byte") {
  Instance euclid = testutil::random_euclid(5, 2, 2.5, Mode::bi, 0.1);
  json j1 = instance_to_json(euclid);
  CHECK(j1["mode"] == "bi");
  CHECK(j1["metric"]["kind"] == "euclidean");
  CHECK(j1["links"].size() == 5);
  json j2 = instance_to_json(instance_from_json(j1));
  CHECK(j1.dump() == j2.dump());

  Instance matrix = testutil::equidistant_links(3, 2.0, 3.0);
  json m1 = instance_to_json(matrix);
  CHECK(m1["metric"]["kind"] == "matrix");
  json m2 = instance_to_json(instance_from_json(m1));
  CHECK(m1.dump() == m2.dump());
}

TEST_CASE("instance json validation") {
  json good = instance_to_json(testutil::random_euclid(2, 0));
  for (const char* key : {"alpha", "beta", "noise", "mode", "metric", "links"}) {
    json j = good;
    j.erase(key);
    CHECK_THROWS_AS(instance_from_json(j), std::invalid_argument);
  }
  json j = good;
  j["mode"] = "both";
  CHECK_THROWS_AS(instance_from_json(j), std::invalid_argument);
  j = good;
  j["metric"]["kind"] = "hyperbolic";
  CHECK_THROWS_AS(instance_from_json(j), std::invalid_argument);
}

TEST_CASE("power json round-trips") {
  for (PowerAssignment p :
       {PowerAssignment::uniform().with_scale(2.5), PowerAssignment::mean(),
        PowerAssignment::linear().with_scale(0.5),
        PowerAssignment::explicit_powers({1.0, 2.0, 3.0})}) {
    PowerAssignment q = power_from_json(power_to_json(p));
    CHECK(q.kind() == p.kind());
    CHECK(q.scale() == p.scale());
    CHECK(q.raw_powers() == p.raw_powers());
  }
  CHECK_THROWS_AS(power_from_json(json{{"kind", "quadratic"}}),
                  std::invalid_argument);
  // Scale is optional and defaults to 1.
  CHECK(power_from_json(json{{"kind", "mean"}}).scale() == 1.0);
}

TEST_CASE("result documents expose the convenience fields") {
  Instance inst = testutil::random_euclid(6, 1);
  PowerAssignment p = PowerAssignment::uniform();

  CapacityResult cr = algorithm_c(inst, p);
  json cj = capacity_result_to_json(cr);
  CHECK(cj["x_size"] == cr.output.size());
  CHECK(cj["power"]["kind"] == "uniform");
  CHECK(cj.contains("selected_affectance"));
  CHECK(cj.contains("power_warning"));

  Schedule s = schedule_first_fit(inst, p);
  json sj = schedule_to_json(s);
  CHECK(sj["method"] == "first_fit");
  CHECK(sj["num_slots"] == s.slots.size());
  CHECK(sj["slot_powers"].size() == s.slots.size());

  json fj = feasibility_to_json(is_feasible(cr.output, p, inst));
  CHECK(fj["feasible"] == true);
  CHECK(fj.contains("worst_link"));
  CHECK(fj.contains("worst_affectance"));

  OracleResult pc = opt_pc(inst);
  json oj = oracle_result_to_json(pc);
  CHECK(oj["opt"] == pc.opt);
  CHECK(oj["witness"].size() == pc.opt);
  CHECK(oj.contains("certificate"));

  json mj = min_schedule_to_json(min_schedule(inst, p));
  CHECK(mj.contains("slots"));
  CHECK(mj.contains("witness"));

  json pj = pc_feasibility_to_json(pc_feasible_oracle(inst.all_ids(), inst));
  CHECK(pj.contains("feasible"));
  CHECK(pj.contains("rho"));
}

TEST_CASE("json files round-trip through disk") {
  const std::string path = "io_roundtrip_tmp.json";
  json j = instance_to_json(testutil::random_euclid(4, 7));
  write_json_file(path, j);
  CHECK(read_json_file(path) == j);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_json_file("definitely_missing_file.json"),
                  std::runtime_error);
}

TEST_CASE("sweep csv: exact layout, sorting, empty optional cells") {
  std::vector<SweepRow> rows(2);
  rows[0].instance_id = "b_inst";
  rows[0].n = 5;
  rows[0].delta = 1.0;
  rows[0].algorithm = "capacity_uniform";
  rows[0].x_size = 3;
  rows[0].oracle_opt = 5;
  rows[0].ratio = 0.6;
  rows[0].runtime_ms = 1.5;
  rows[1].instance_id = "a_inst";
  rows[1].n = 2;
  rows[1].delta = 2.0;
  rows[1].algorithm = "pc";
  rows[1].x_size = 2;
  rows[1].slots = 4;
  rows[1].runtime_ms = 0.25;

  CHECK(sweep_csv(rows) ==
        "instance_id,n,delta,algorithm,x_size,oracle_opt,ratio,slots,runtime_ms\n"
        "a_inst,2,2.0,pc,2,,,4,0.25\n"
        "b_inst,5,1.0,capacity_uniform,3,5,0.6,,1.5\n");

  // Same instance: rows ordered by algorithm name.
  rows[1].instance_id = "b_inst";
  std::string csv = sweep_csv(rows);
  CHECK(csv.find("b_inst,5") < csv.find("b_inst,2"));
}

}  // TEST_SUITE
