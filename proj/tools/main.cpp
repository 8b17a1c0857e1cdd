// sinrcap command line driver: generate instances, run the capacity and
// scheduling algorithms and their oracles, verify certificates and result
// files, and sweep whole experiment batches into CSV.
//
// Exit codes: 0 success, 2 validation failure (bad input, cap exceeded,
// failed verification), 3 oracle inconclusive.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sinrcap/capacity.hpp"
#include "sinrcap/errors.hpp"
#include "sinrcap/instances.hpp"
#include "sinrcap/io.hpp"
#include "sinrcap/matrix.hpp"
#include "sinrcap/model.hpp"
#include "sinrcap/oracle.hpp"
#include "sinrcap/scheduling.hpp"

namespace {

using nlohmann::json;
using namespace sinrcap;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw std::invalid_argument(path + ": malformed JSON at line " +
                                std::to_string(line) + ", column " +
                                std::to_string(col));
  }
}

Instance load_instance(const std::string& path) {
  return instance_from_json(load_json(path));
}

PowerAssignment make_power(const std::string& kind, double scale,
                           const std::string& powers_path) {
  PowerAssignment p = PowerAssignment::uniform();
  if (kind == "uniform")
    p = PowerAssignment::uniform();
  else if (kind == "mean")
    p = PowerAssignment::mean();
  else if (kind == "linear")
    p = PowerAssignment::linear();
  else if (kind == "explicit") {
    if (powers_path.empty())
      throw std::invalid_argument("--power explicit requires --powers FILE");
    p = PowerAssignment::explicit_powers(
        load_json(powers_path).get<std::vector<double>>());
  } else {
    throw std::invalid_argument("unknown power kind '" + kind + "'");
  }
  return p.with_scale(scale);
}

void emit(const json& result, const std::string& out_path, bool as_json,
          const std::string& human) {
  if (!out_path.empty()) write_json_file(out_path, result);
  if (as_json)
    std::cout << result.dump(2) << '\n';
  else if (!human.empty())
    std::cout << human << '\n';
}

std::vector<std::pair<int, int>> parse_edges(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string tok = text.substr(pos, comma - pos);
    const std::size_t dash = tok.find('-');
    if (dash == std::string::npos)
      throw std::invalid_argument("bad edge token '" + tok +
                                  "', expected U-V");
    edges.emplace_back(std::stoi(tok.substr(0, dash)),
                       std::stoi(tok.substr(dash + 1)));
    pos = comma + 1;
  }
  return edges;
}

std::pair<int, int> parse_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = std::stoi(text);
    return {v, v};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

// ---------------------------------------------------------------- generate

struct GenerateOpts {
  std::string kind;
  std::string out, meta_out;
  bool as_json = false;
  // lb
  int K = 1;
  double gamma_lb = 14.0;
  // gadget
  std::size_t vertices = 1;
  std::string edges;
  // euclid / redblue
  std::size_t n = 10;
  double region = 100.0, min_length = 1.0, max_length = 2.0;
  std::uint64_t seed = 1;
  double beta = 1.0, noise = 0.0;
  std::string mode = "uni";
  std::size_t n_red = 1, n_blue = 5;
  double alpha = 2.0;
  bool alpha_set = false;
};

int run_generate(const GenerateOpts& o) {
  Instance inst = gen_gadget({1, {}, 1.0});  // placeholder, replaced below
  json meta;
  if (o.kind == "lb") {
    auto lb = gen_lower_bound({o.K, o.gamma_lb, o.alpha_set ? o.alpha : 2.0});
    inst = std::move(lb.instance);
    meta = json{{"certificate", lb.certificate.p()},
                {"group", lb.group},
                {"power", power_to_json(lb.power)}};
  } else if (o.kind == "gadget") {
    const double alpha =
        o.alpha_set ? o.alpha
                    : std::log2(static_cast<double>(o.vertices)) + 1.0;
    inst = gen_gadget({o.vertices, parse_edges(o.edges), alpha});
    meta = json{{"vertices", o.vertices}, {"alpha", alpha}};
  } else if (o.kind == "euclid") {
    inst = gen_random_euclidean({o.n, o.region, o.min_length, o.max_length,
                                 o.seed, o.alpha_set ? o.alpha : 2.0, o.beta,
                                 o.noise,
                                 o.mode == "bi" ? Mode::bi : Mode::uni});
    meta = json{{"seed", o.seed}};
  } else if (o.kind == "redblue") {
    auto fx = gen_red_blue_fixture(
        {o.n_red, o.n_blue, o.alpha_set ? o.alpha : 2.0, o.seed});
    inst = std::move(fx.instance);
    meta = json{{"red", fx.red}, {"blue", fx.blue}};
  } else {
    throw std::invalid_argument("unknown --kind '" + o.kind + "'");
  }

  const json doc = instance_to_json(inst);
  if (o.out.empty() && !o.as_json)
    throw std::invalid_argument("generate: give -o FILE or --json");
  if (!o.meta_out.empty()) write_json_file(o.meta_out, meta);
  emit(doc, o.out, o.as_json,
       "wrote " + o.out + ": " + std::to_string(inst.n()) + " links, " +
           std::to_string(inst.metric().size()) + " points");
  return 0;
}

// ---------------------------------------------------------------- capacity

struct CapacityOpts {
  std::string instance, out;
  std::string power = "uniform", powers_file;
  double scale = 1.0, gamma = 0.5;
  bool equilength = false, as_json = false;
  double strengthen_delta = 0.0, strengthen_tau = 1.0;
};

int run_capacity(const CapacityOpts& o) {
  const Instance inst = load_instance(o.instance);
  const PowerAssignment p = make_power(o.power, o.scale, o.powers_file);
  const auto ids = inst.all_ids();
  const CapacityResult r = o.equilength
                               ? equilength_capacity(inst, ids, p, {o.gamma})
                               : algorithm_c(inst, p, {o.gamma});
  json res = capacity_result_to_json(r);
  if (o.strengthen_delta > 0.0) {
    res["groups"] = signal_strengthen(inst, r.output, r.power,
                                      SignalStrength{o.strengthen_tau},
                                      SignalStrength{o.strengthen_delta});
  }
  emit(res, o.out, o.as_json,
       "selected " + std::to_string(r.selected.size()) + ", output " +
           std::to_string(r.output.size()) + " of " + std::to_string(inst.n()) +
           " links");
  return 0;
}

// ---------------------------------------------------------------- pc

int run_pc(const std::string& instance, const std::string& out, bool as_json) {
  const Instance inst = load_instance(instance);
  const CapacityResult r = inst.mode() == Mode::uni
                               ? algorithm_pc(inst)
                               : bidirectional_pc_capacity(inst);
  emit(capacity_result_to_json(r), out, as_json,
       "output " + std::to_string(r.output.size()) + " of " +
           std::to_string(inst.n()) + " links");
  return 0;
}

// ---------------------------------------------------------------- schedule

struct ScheduleOpts {
  std::string instance, out;
  std::string method = "repeated", regime = "fixed";
  std::string power = "uniform", powers_file;
  double scale = 1.0;
  bool as_json = false;
};

int run_schedule(const ScheduleOpts& o) {
  const Instance inst = load_instance(o.instance);
  Schedule s;
  if (o.method == "first_fit") {
    if (o.regime != "fixed")
      throw std::invalid_argument("first_fit schedules a fixed power only");
    s = schedule_first_fit(inst, make_power(o.power, o.scale, o.powers_file));
  } else if (o.method == "repeated") {
    ScheduleRegime regime =
        o.regime == "pc"
            ? (inst.mode() == Mode::uni ? ScheduleRegime::pc_uni()
                                        : ScheduleRegime::pc_bi())
            : ScheduleRegime::fixed(
                  make_power(o.power, o.scale, o.powers_file));
    if (o.regime != "pc" && o.regime != "fixed")
      throw std::invalid_argument("--regime must be fixed or pc");
    s = schedule_repeated_capacity(inst, regime);
  } else {
    throw std::invalid_argument("--method must be repeated or first_fit");
  }
  emit(schedule_to_json(s), o.out, o.as_json,
       std::to_string(s.slots.size()) + " slots for " +
           std::to_string(inst.n()) + " links");
  return 0;
}

// ---------------------------------------------------------------- oracle

struct OracleOpts {
  std::string instance, out;
  std::string which = "fixed";
  std::string power = "uniform", powers_file;
  double scale = 1.0, delta = 1.0;
  std::size_t cap = 16;
  bool cap_set = false, as_json = false;
};

int run_oracle(const OracleOpts& o) {
  const Instance inst = load_instance(o.instance);
  if (o.which == "fixed") {
    const OracleResult r =
        opt_fixed(inst, make_power(o.power, o.scale, o.powers_file),
                  SignalStrength{o.delta}, o.cap);
    emit(oracle_result_to_json(r), o.out, o.as_json,
         "opt " + std::to_string(r.opt));
  } else if (o.which == "pc") {
    const OracleResult r = opt_pc(inst, o.cap);
    emit(oracle_result_to_json(r), o.out, o.as_json,
         "opt " + std::to_string(r.opt));
  } else if (o.which == "schedule") {
    const MinScheduleResult r =
        min_schedule(inst, make_power(o.power, o.scale, o.powers_file),
                     o.cap_set ? o.cap : 10);
    emit(min_schedule_to_json(r), o.out, o.as_json,
         "minimum slots " + std::to_string(r.slots));
  } else {
    throw std::invalid_argument("--which must be fixed, pc or schedule");
  }
  return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyOpts {
  std::string instance, certificate, result;
  double delta = 1.0;
  bool as_json = false;
};

int run_verify(const VerifyOpts& o) {
  const Instance inst = load_instance(o.instance);
  if (o.certificate.empty() == o.result.empty())
    throw std::invalid_argument(
        "verify: give exactly one of --certificate or --result");

  if (!o.certificate.empty()) {
    json doc = load_json(o.certificate);
    if (doc.is_object() && doc.contains("certificate"))
      doc = doc.at("certificate");
    const PowerCertificate cert(doc.get<std::vector<double>>());
    const auto ids = inst.all_ids();
    const Matrix m = power_control_matrix(ids, inst);
    const bool ok = check_certificate(m, cert);
    emit(json{{"holds", ok}}, "", o.as_json,
         ok ? "certificate holds" : "certificate violated");
    return ok ? 0 : 2;
  }

  const json doc = load_json(o.result);
  const auto verify_set = [&](const std::vector<int>& ids,
                              const PowerAssignment& p) {
    return is_feasible(ids, p, inst, SignalStrength{o.delta}).feasible;
  };
  bool ok = true;
  if (doc.contains("output")) {
    ok = verify_set(doc.at("output").get<std::vector<int>>(),
                    power_from_json(doc.at("power")));
  } else if (doc.contains("slots")) {
    const auto slots = doc.at("slots").get<std::vector<std::vector<int>>>();
    const auto& powers = doc.at("slot_powers");
    for (std::size_t i = 0; ok && i < slots.size(); ++i)
      ok = verify_set(slots[i], power_from_json(powers.at(i)));
  } else {
    throw std::invalid_argument(
        "verify: result file has neither 'output' nor 'slots'");
  }
  emit(json{{"verified", ok}}, "", o.as_json,
       ok ? "result verified" : "verification failed");
  return ok ? 0 : 2;
}

// ---------------------------------------------------------------- sweep

struct SweepOpts {
  std::string kind;  // lb | euclid, or empty when --instance files given
  std::vector<std::string> instances;
  std::string out;
  std::string K = "1..3";
  double gamma_lb = 14.0, alpha = 2.0;
  std::size_t n = 10, count = 10;
  std::uint64_t seed = 1;
  double region = 100.0, min_length = 1.0, max_length = 2.0;
  double beta = 1.0, noise = 0.0;
  std::string mode = "uni";
  std::string algorithm = "capacity";  // capacity | pc
  std::string power = "uniform", powers_file;
  double scale = 1.0, delta = 1.0;
  std::string schedule = "none";  // none | repeated | first_fit
  bool oracle = false, no_timing = false;
  std::size_t cap = 16;
  int threads = 1;
};

SweepRow run_sweep_job(const SweepOpts& o, const std::string& id,
                       const Instance& inst) {
  SweepRow row;
  row.instance_id = id;
  row.n = inst.n();
  row.delta = o.delta;

  const bool pc = o.algorithm == "pc";
  const PowerAssignment p =
      pc ? PowerAssignment::mean() : make_power(o.power, o.scale, o.powers_file);

  const auto t0 = std::chrono::steady_clock::now();
  const CapacityResult cap_res =
      pc ? (inst.mode() == Mode::uni ? algorithm_pc(inst)
                                     : bidirectional_pc_capacity(inst))
         : algorithm_c(inst, p);
  row.x_size = cap_res.output.size();

  if (o.schedule == "first_fit") {
    row.slots = schedule_first_fit(inst, p).slots.size();
  } else if (o.schedule == "repeated") {
    const ScheduleRegime regime =
        pc ? (inst.mode() == Mode::uni ? ScheduleRegime::pc_uni()
                                       : ScheduleRegime::pc_bi())
           : ScheduleRegime::fixed(p);
    row.slots = schedule_repeated_capacity(inst, regime).slots.size();
  } else if (o.schedule != "none") {
    throw std::invalid_argument("--schedule must be none, repeated or first_fit");
  }
  const auto t1 = std::chrono::steady_clock::now();
  row.runtime_ms =
      o.no_timing
          ? 0.0
          : std::chrono::duration<double, std::milli>(t1 - t0).count();

  if (pc)
    row.algorithm = o.schedule == "none" ? "pc" : o.schedule + "_pc";
  else
    row.algorithm =
        (o.schedule == "none" ? "capacity_" : o.schedule + "_") + o.power;

  if (o.oracle && inst.n() <= o.cap) {
    const OracleResult opt =
        pc ? opt_pc(inst, o.cap)
           : opt_fixed(inst, p, SignalStrength{o.delta}, o.cap);
    row.oracle_opt = opt.opt;
    if (opt.opt > 0)
      row.ratio = static_cast<double>(row.x_size) / static_cast<double>(opt.opt);
  }
  return row;
}

int run_sweep(const SweepOpts& o) {
  struct Job {
    std::string id;
    std::function<Instance()> make;
  };
  std::vector<Job> jobs;
  for (const std::string& path : o.instances)
    jobs.push_back({std::filesystem::path(path).stem().string(),
                    [path] { return load_instance(path); }});
  if (o.kind == "lb") {
    const auto [lo, hi] = parse_range(o.K);
    for (int k = lo; k <= hi; ++k)
      jobs.push_back({"lb_K" + std::to_string(k), [o, k] {
                        return gen_lower_bound({k, o.gamma_lb, o.alpha})
                            .instance;
                      }});
  } else if (o.kind == "euclid") {
    for (std::size_t i = 0; i < o.count; ++i) {
      const std::uint64_t seed = o.seed + i;
      jobs.push_back({"euclid_n" + std::to_string(o.n) + "_s" +
                          std::to_string(seed),
                      [o, seed] {
                        return gen_random_euclidean(
                            {o.n, o.region, o.min_length, o.max_length, seed,
                             o.alpha, o.beta, o.noise,
                             o.mode == "bi" ? Mode::bi : Mode::uni});
                      }});
    }
  } else if (!o.kind.empty()) {
    throw std::invalid_argument("--kind must be lb or euclid");
  }
  if (jobs.empty())
    throw std::invalid_argument("sweep: no instances (--kind or --instance)");

  std::vector<SweepRow> rows(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      try {
        rows[i] = run_sweep_job(o, jobs[i].id, jobs[i].make());
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int nthreads = std::max(1, o.threads);
  if (nthreads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);

  const std::string csv = sweep_csv(std::move(rows));
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + o.out);
  out << csv;
  std::cout << "wrote " << o.out << ": " << jobs.size() << " instances\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SINR capacity and scheduling in general metrics"};
  app.require_subcommand(1);

  GenerateOpts gen;
  CLI::App* g = app.add_subcommand("generate", "produce an instance file");
  g->add_option("--kind", gen.kind, "lb | gadget | euclid | redblue")
      ->required();
  g->add_option("-o,--out", gen.out, "instance JSON path");
  g->add_option("--meta-out", gen.meta_out,
                "side data (lb certificate, red/blue classes)");
  g->add_flag("--json", gen.as_json, "print the instance JSON to stdout");
  g->add_option("--K", gen.K, "lb: number of rings");
  g->add_option("--gamma-lb", gen.gamma_lb, "lb: ring spread factor");
  g->add_option("--vertices", gen.vertices, "gadget: vertex count");
  g->add_option("--edges", gen.edges, "gadget: edges as U-V,U-V,...");
  g->add_option("--n", gen.n, "euclid: link count");
  g->add_option("--region", gen.region, "euclid: square side");
  g->add_option("--min-length", gen.min_length, "euclid: shortest link");
  g->add_option("--max-length", gen.max_length, "euclid: longest link");
  g->add_option("--seed", gen.seed, "euclid/redblue: RNG seed");
  g->add_option("--beta", gen.beta, "euclid: SINR threshold");
  g->add_option("--noise", gen.noise, "euclid: ambient noise");
  g->add_option("--mode", gen.mode, "euclid: uni | bi");
  g->add_option("--red", gen.n_red, "redblue: red link count");
  g->add_option("--blue", gen.n_blue, "redblue: blue link count");
  const auto* gen_alpha = g->add_option("--alpha", gen.alpha, "path loss");

  CapacityOpts cap;
  CLI::App* c = app.add_subcommand("capacity",
                                   "greedy capacity under a fixed power");
  c->add_option("--instance", cap.instance)->required();
  c->add_option("-o,--out", cap.out);
  c->add_option("--power", cap.power, "uniform | mean | linear | explicit");
  c->add_option("--powers", cap.powers_file, "explicit powers JSON array");
  c->add_option("--scale", cap.scale);
  c->add_option("--gamma", cap.gamma, "admission threshold in (0,1)");
  c->add_flag("--equilength", cap.equilength,
              "best single factor-2 length class");
  c->add_flag("--json", cap.as_json);
  c->add_option("--strengthen-delta", cap.strengthen_delta,
                "split the output into delta-signal groups");
  c->add_option("--strengthen-tau", cap.strengthen_tau,
                "signal strength the output already has");

  std::string pc_instance, pc_out;
  bool pc_json = false;
  CLI::App* pcmd =
      app.add_subcommand("pc", "capacity with oblivious mean power");
  pcmd->add_option("--instance", pc_instance)->required();
  pcmd->add_option("-o,--out", pc_out);
  pcmd->add_flag("--json", pc_json);

  ScheduleOpts sch;
  CLI::App* s = app.add_subcommand("schedule", "partition links into slots");
  s->add_option("--instance", sch.instance)->required();
  s->add_option("-o,--out", sch.out);
  s->add_option("--method", sch.method, "repeated | first_fit");
  s->add_option("--regime", sch.regime, "fixed | pc");
  s->add_option("--power", sch.power);
  s->add_option("--powers", sch.powers_file);
  s->add_option("--scale", sch.scale);
  s->add_flag("--json", sch.as_json);

  OracleOpts ora;
  CLI::App* orc = app.add_subcommand("oracle", "exact optima on small inputs");
  orc->add_option("--instance", ora.instance)->required();
  orc->add_option("-o,--out", ora.out);
  orc->add_option("--which", ora.which, "fixed | pc | schedule");
  orc->add_option("--power", ora.power);
  orc->add_option("--powers", ora.powers_file);
  orc->add_option("--scale", ora.scale);
  orc->add_option("--delta", ora.delta, "required signal strength");
  const auto* cap_opt = orc->add_option("--cap", ora.cap, "size refusal cap");
  orc->add_flag("--json", ora.as_json);

  VerifyOpts ver;
  CLI::App* v = app.add_subcommand(
      "verify", "re-check a certificate or result file offline");
  v->add_option("--instance", ver.instance)->required();
  v->add_option("--certificate", ver.certificate,
                "power-control certificate JSON");
  v->add_option("--result", ver.result, "capacity or schedule result JSON");
  v->add_option("--delta", ver.delta);
  v->add_flag("--json", ver.as_json);

  SweepOpts sw;
  CLI::App* w = app.add_subcommand("sweep", "batch experiments to CSV");
  w->add_option("--kind", sw.kind, "lb | euclid");
  w->add_option("--instance", sw.instances, "instance files to include");
  w->add_option("-o,--out", sw.out)->required();
  w->add_option("--K", sw.K, "lb ring range, e.g. 2..6");
  w->add_option("--gamma-lb", sw.gamma_lb);
  w->add_option("--alpha", sw.alpha);
  w->add_option("--n", sw.n, "euclid links per instance");
  w->add_option("--count", sw.count, "euclid instance count");
  w->add_option("--seed", sw.seed, "euclid base seed");
  w->add_option("--region", sw.region);
  w->add_option("--min-length", sw.min_length);
  w->add_option("--max-length", sw.max_length);
  w->add_option("--beta", sw.beta);
  w->add_option("--noise", sw.noise);
  w->add_option("--mode", sw.mode, "uni | bi");
  w->add_option("--algorithm", sw.algorithm, "capacity | pc");
  w->add_option("--power", sw.power);
  w->add_option("--powers", sw.powers_file);
  w->add_option("--scale", sw.scale);
  w->add_option("--delta", sw.delta);
  w->add_option("--schedule", sw.schedule, "none | repeated | first_fit");
  w->add_flag("--oracle", sw.oracle, "add oracle_opt and ratio when n <= cap");
  w->add_option("--cap", sw.cap, "oracle size cap");
  w->add_flag("--no-timing", sw.no_timing,
              "zero the runtime column for diff-able output");
  w->add_option("--threads", sw.threads, "parallel instances")
      ->envname("SINRCAP_THREADS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (g->parsed()) {
      gen.alpha_set = gen_alpha->count() > 0;
      return run_generate(gen);
    }
    if (c->parsed()) return run_capacity(cap);
    if (pcmd->parsed()) return run_pc(pc_instance, pc_out, pc_json);
    if (s->parsed()) return run_schedule(sch);
    if (orc->parsed()) {
      ora.cap_set = cap_opt->count() > 0;
      return run_oracle(ora);
    }
    if (v->parsed()) return run_verify(ver);
    if (w->parsed()) return run_sweep(sw);
  } catch (const OracleInconclusiveError& e) {
    std::cerr << "oracle inconclusive: " << e.what() << '\n';
    return 3;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const WeakLinkError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const FixtureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
