#include "sinrcap/io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace sinrcap {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("instance json: " + what);
}

MetricSpace metric_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "euclidean") {
    const auto dim = j.at("dim").get<std::size_t>();
    auto points = j.at("points").get<std::vector<std::vector<double>>>();
    return MetricSpace::euclidean(dim, points);
  }
  if (kind == "matrix") {
    auto dist = j.at("dist").get<std::vector<std::vector<double>>>();
    return MetricSpace::from_matrix(dist);
  }
  bad("unknown metric kind '" + kind + "'");
}

json metric_to_json(const MetricSpace& m) {
  json j;
  if (m.is_euclidean()) {
    j["kind"] = "euclidean";
    j["dim"] = m.dim();
    json points = json::array();
    for (std::size_t p = 0; p < m.size(); ++p) {
      const auto coords = m.point(p);
      points.push_back(std::vector<double>(coords.begin(), coords.end()));
    }
    j["points"] = std::move(points);
  } else {
    j["kind"] = "matrix";
    json dist = json::array();
    for (std::size_t a = 0; a < m.size(); ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < m.size(); ++b) row.push_back(m.distance(a, b));
      dist.push_back(std::move(row));
    }
    j["dist"] = std::move(dist);
  }
  return j;
}

}  // namespace

json instance_to_json(const Instance& inst) {
  json j;
  j["alpha"] = inst.alpha();
  j["beta"] = inst.beta();
  j["noise"] = inst.noise();
  j["mode"] = inst.mode() == Mode::uni ? "uni" : "bi";
  j["metric"] = metric_to_json(inst.metric());
  json links = json::array();
  for (const Link& l : inst.links())
    links.push_back(json{{"s", l.sender}, {"r", l.receiver}});
  j["links"] = std::move(links);
  return j;
}

Instance instance_from_json(const json& j) {
  for (const char* key : {"alpha", "beta", "noise", "mode", "metric", "links"})
    if (!j.contains(key)) bad(std::string("missing field '") + key + "'");

  const std::string mode_str = j.at("mode").get<std::string>();
  Mode mode;
  if (mode_str == "uni")
    mode = Mode::uni;
  else if (mode_str == "bi")
    mode = Mode::bi;
  else
    bad("mode must be 'uni' or 'bi', got '" + mode_str + "'");

  std::vector<std::pair<std::size_t, std::size_t>> endpoints;
  for (const json& l : j.at("links"))
    endpoints.emplace_back(l.at("s").get<std::size_t>(),
                           l.at("r").get<std::size_t>());

  return Instance(metric_from_json(j.at("metric")), endpoints,
                  j.at("alpha").get<double>(), j.at("beta").get<double>(),
                  j.at("noise").get<double>(), mode);
}

json power_to_json(const PowerAssignment& p) {
  json j;
  switch (p.kind()) {
    case PowerKind::uniform: j["kind"] = "uniform"; break;
    case PowerKind::mean: j["kind"] = "mean"; break;
    case PowerKind::linear: j["kind"] = "linear"; break;
    case PowerKind::explicit_powers:
      j["kind"] = "explicit";
      j["powers"] = p.raw_powers();
      break;
  }
  j["scale"] = p.scale();
  return j;
}

PowerAssignment power_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  PowerAssignment p = PowerAssignment::uniform();
  if (kind == "uniform")
    p = PowerAssignment::uniform();
  else if (kind == "mean")
    p = PowerAssignment::mean();
  else if (kind == "linear")
    p = PowerAssignment::linear();
  else if (kind == "explicit")
    p = PowerAssignment::explicit_powers(
        j.at("powers").get<std::vector<double>>());
  else
    throw std::invalid_argument("power json: unknown kind '" + kind + "'");
  if (j.contains("scale")) p = p.with_scale(j.at("scale").get<double>());
  return p;
}

json capacity_result_to_json(const CapacityResult& r) {
  return json{{"selected", r.selected},
              {"output", r.output},
              {"x_size", r.output.size()},
              {"selected_affectance", r.selected_affectance},
              {"weak_links", r.weak_links},
              {"power_warning", r.power_warning},
              {"power", power_to_json(r.power)}};
}

json schedule_to_json(const Schedule& s) {
  json powers = json::array();
  for (const PowerAssignment& p : s.slot_powers) powers.push_back(power_to_json(p));
  return json{{"method", s.method == ScheduleMethod::repeated_capacity
                             ? "repeated_capacity"
                             : "first_fit"},
              {"num_slots", s.slots.size()},
              {"slots", s.slots},
              {"slot_powers", std::move(powers)},
              {"weak_links", s.weak_links}};
}

json feasibility_to_json(const FeasibilityReport& r) {
  return json{{"feasible", r.feasible},
              {"worst_link", r.worst_link},
              {"worst_affectance", r.worst_affectance},
              {"weak_links", r.weak_links}};
}

json oracle_result_to_json(const OracleResult& r) {
  json j{{"opt", r.opt}, {"witness", r.witness}, {"evaluated", r.evaluated}};
  if (r.certificate) j["certificate"] = r.certificate->p();
  return j;
}

json min_schedule_to_json(const MinScheduleResult& r) {
  return json{{"slots", r.slots}, {"witness", r.witness}};
}

json pc_feasibility_to_json(const PcFeasibility& r) {
  json j{{"feasible", r.feasible}, {"rho", r.rho}};
  if (r.certificate) j["certificate"] = r.certificate->p();
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string sweep_csv(std::vector<SweepRow> rows) {
  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.instance_id != b.instance_id) return a.instance_id < b.instance_id;
    return a.algorithm < b.algorithm;
  });
  // json's shortest round-trip formatting guarantees "." decimals regardless
  // of locale.
  const auto num = [](double x) { return json(x).dump(); };
  std::string out =
      "instance_id,n,delta,algorithm,x_size,oracle_opt,ratio,slots,runtime_ms\n";
  for (const SweepRow& r : rows) {
    out += r.instance_id + ',' + std::to_string(r.n) + ',' + num(r.delta) +
           ',' + r.algorithm + ',' + std::to_string(r.x_size) + ',';
    if (r.oracle_opt) out += std::to_string(*r.oracle_opt);
    out += ',';
    if (r.ratio) out += num(*r.ratio);
    out += ',';
    if (r.slots) out += std::to_string(*r.slots);
    out += ',' + num(r.runtime_ms) + '\n';
  }
  return out;
}

}  // namespace sinrcap
