#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "agr/automata.hpp"
#include "agr/bench.hpp"
#include "agr/dsl.hpp"
#include "agr/smtlib.hpp"
#include "agr/weakest.hpp"

namespace fs = std::filesystem;
using namespace agr;

namespace {

constexpr int kInputError = 3;

struct Options {
  std::string m1, m2, prop, json_out, dot_dir, config_file;
  std::string repair, solver, cex;
  size_t max_iter = 0, bound = 0;
  bool no_auto_switch = false, bound_ok = false, quiet = false;
};

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// key = value lines; '#' starts a comment.
void apply_config_file(const std::string& path, AgrConfig& cfg, std::string& solver) {
  std::istringstream in(read_file(path));
  std::string line;
  size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error(path + ":" + std::to_string(n) + ": expected key = value");
    std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    if (k == "repair") cfg.repair_method = parse_method(v);
    else if (k == "max_iterations") cfg.max_iterations = std::stoul(v);
    else if (k == "search_bound") cfg.search_bound = std::stoul(v);
    else if (k == "auto_switch_on_pumping" || k == "auto_switch") cfg.auto_switch_on_pumping = v == "true";
    else if (k == "bound_exhausted_is_satisfied") cfg.bound_exhausted_is_satisfied = v == "true";
    else if (k == "counterexamples") cfg.cex_handling = parse_cex_handling(v);
    else if (k == "solver") solver = v;
    else throw std::runtime_error(path + ":" + std::to_string(n) + ": unknown key '" + k + "'");
  }
}

std::unique_ptr<SatBackend> make_backend(std::string solver) {
  if (const char* env = std::getenv("AGR_SOLVER"); env && *env) solver = env;
  if (solver.empty() || solver == "builtin") return std::make_unique<BuiltinBackend>();
  if (solver.rfind("external:", 0) == 0) return std::make_unique<ExternalBackend>(solver.substr(9));
  throw std::runtime_error("unknown solver '" + solver + "' (use builtin or external:CMD)");
}

void write_text(const fs::path& p, const std::string& s) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << s;
}

int run_verify(const Options& o) {
  AgrConfig cfg;
  std::string solver = o.solver;
  if (!o.config_file.empty()) apply_config_file(o.config_file, cfg, solver);
  if (!o.repair.empty()) cfg.repair_method = parse_method(o.repair);
  if (o.max_iter) cfg.max_iterations = o.max_iter;
  if (o.bound) cfg.search_bound = o.bound;
  if (!o.cex.empty()) cfg.cex_handling = parse_cex_handling(o.cex);
  if (o.no_auto_switch) cfg.auto_switch_on_pumping = false;
  if (o.bound_ok) cfg.bound_exhausted_is_satisfied = true;
  auto backend = make_backend(solver);
  cfg.backend = backend.get();

  ParsedProgram m1 = load_program_file(o.m1), m2 = load_program_file(o.m2), p = load_program_file(o.prop);
  AgrOutcome out = run_agr(m1.program, m2.program, p.program, cfg);

  if (!o.quiet) {
    std::cout << outcome_name(out.kind) << " after " << out.iterations << " iteration(s), " << out.repairs
              << " repair(s)\n";
    if (!out.reason.empty()) std::cout << "reason: " << out.reason << "\n";
    for (const auto& w : out.warnings) std::cout << "warning: " << w << "\n";
    for (const auto& it : out.log) {
      if (!it.repair) continue;
      const RepairRecord& r = *it.repair;
      std::cout << "iteration " << it.index << ": " << r.kind << " repair of " << trace_to_string(r.removed);
      if (r.psi) std::cout << " with constraint [" << r.psi->to_string() << "]";
      std::cout << "\n";
    }
    if (out.assumption)
      std::cout << "assumption: " << live_states(*out.assumption) << " live state(s)\n";
    std::cout << "repaired M2: " << out.repaired_m2.size() << " state(s)\n";
  }
  if (!o.json_out.empty()) {
    Json j = report_json(out, cfg, {m1.program.name(), m2.program.name(), p.program.name()});
    write_text(o.json_out, j.dump(2) + "\n");
  }
  if (!o.dot_dir.empty()) {
    fs::create_directories(o.dot_dir);
    write_text(fs::path(o.dot_dir) / "m2_repaired.dot", to_dot(out.repaired_m2));
    if (out.assumption) write_text(fs::path(o.dot_dir) / "assumption.dot", to_dot(*out.assumption));
  }
  if (out.kind != AgrOutcome::Kind::Verified) return 2;
  return out.repairs ? 1 : 0;
}

int run_check_feasible(const std::string& trace_file, const std::string& solver) {
  Trace t = load_trace_file(trace_file);
  auto backend = make_backend(solver);
  Feasibility f = is_feasible(t, *backend);
  if (!f.feasible) {
    std::cout << "Infeasible\n";
    return 1;
  }
  std::cout << "Feasible\n";
  for (size_t i = 0; i < f.execution.size(); ++i) {
    std::cout << "  " << i << (i ? " after " + t[i - 1].key() : " initial") << ":";
    for (const auto& [v, val] : f.execution[i]) std::cout << " " << v << "=" << to_string(val);
    std::cout << "\n";
  }
  return 0;
}

int run_weakest(const std::string& m1f, const std::string& pf, const std::string& af, bool dot) {
  ParsedProgram m1 = load_program_file(m1f), p = load_program_file(pf);
  Trace letters = load_trace_file(af);
  Alphabet alpha(letters.begin(), letters.end());
  WeakestAssumption w = weakest_assumption(m1.program, p.program, alpha);
  std::cout << (dot ? to_dot(w.dfa) : print_program(w.dfa));
  return 0;
}

int run_bench_cmd(const std::string& suite, const std::string& json_out, size_t threads) {
  auto instances = load_suite(suite);
  auto rows = run_bench(instances, AgrConfig{}, threads);
  std::printf("%-28s %5s %5s %5s %9s %5s %6s %-12s %4s %s\n", "example", "|M1|", "|M2|", "|P|", "time[s]", "|A|",
              "|M2'|", "method", "it", "outcome");
  for (const auto& r : rows)
    std::printf("%-28s %5zu %5zu %5zu %9.3f %5zu %6zu %-12s %4zu %s\n", r.example.c_str(), r.m1_size, r.m2_size,
                r.p_size, r.time_s, r.assumption_size, r.repair_size, r.method.c_str(), r.iterations,
                r.outcome.c_str());
  if (!json_out.empty()) write_text(json_out, bench_json(rows).dump(2) + "\n");
  return 0;
}

int run_gen_clients(size_t k, const std::string& dir) {
  ClientFamily f = make_client_family(k);
  fs::create_directories(dir);
  write_text(fs::path(dir) / "m1.agr", print_program(f.m1));
  write_text(fs::path(dir) / "m2.agr", print_program(f.m2));
  write_text(fs::path(dir) / "prop.agr", print_program(f.p, true));
  Json meta = {{"family", "multi-client"},
               {"methods", {"exact", "approximate", "aggressive"}},
               {"generated", "agr gen-clients --k " + std::to_string(k)}};
  write_text(fs::path(dir) / "meta.json", meta.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Assume-guarantee verification with learning and repair"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "run the assume-guarantee-repair loop");
  verify->add_option("--m1", o.m1, "first component")->required();
  verify->add_option("--m2", o.m2, "second component (repaired if needed)")->required();
  verify->add_option("--prop", o.prop, "safety property")->required();
  verify->add_option("--repair", o.repair, "exact | approx | aggressive");
  verify->add_option("--max-iters,--max-iter", o.max_iter, "iteration cap");
  verify->add_option("--bound", o.bound, "search depth bound (0 = automatic)");
  verify->add_option("--cex", o.cex, "suffixes | prefixes: where L* stores counterexamples");
  verify->add_flag("--no-auto-switch", o.no_auto_switch, "keep exact repair even when it cannot converge");
  verify->add_flag("--bound-as-satisfied", o.bound_ok, "treat an exhausted search bound as satisfied");
  verify->add_option("--solver", o.solver, "builtin | external:CMD");
  verify->add_option("--config", o.config_file, "key = value configuration file");
  verify->add_option("--json", o.json_out, "write a JSON report");
  verify->add_option("--emit-dot", o.dot_dir, "write DOT files into this directory");
  verify->add_flag("--quiet", o.quiet, "no summary on stdout");

  std::string trace_file, solver;
  auto* feas = app.add_subcommand("check-feasible", "decide feasibility of a trace");
  feas->add_option("--trace", trace_file, "one action per line")->required();
  feas->add_option("--solver", solver, "builtin | external:CMD");

  std::string wm1, wprop, walpha;
  bool wdot = false;
  auto* weak = app.add_subcommand("weakest", "weakest assumption for constraint-free inputs");
  weak->add_option("--m1", wm1)->required();
  weak->add_option("--prop", wprop)->required();
  weak->add_option("--alphabet", walpha, "M2 letters, one per line")->required();
  weak->add_flag("--dot", wdot);

  std::string suite, bench_json_out;
  size_t threads = 0;
  auto* bench = app.add_subcommand("bench", "run a fixture suite");
  bench->add_option("--suite", suite)->required();
  bench->add_option("--json", bench_json_out);
  bench->add_option("--threads", threads);

  size_t k = 3;
  std::string gen_dir;
  auto* gen = app.add_subcommand("gen-clients", "write a chained-client fixture");
  gen->add_option("--k", k, "number of clients")->required();
  gen->add_option("--out", gen_dir)->required();

  std::string pfile;
  bool pdot = false;
  auto* print = app.add_subcommand("print", "normalize a program file");
  print->add_option("file", pfile)->required();
  print->add_flag("--dot", pdot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*verify) return run_verify(o);
    if (*feas) return run_check_feasible(trace_file, solver);
    if (*weak) return run_weakest(wm1, wprop, walpha, wdot);
    if (*bench) return run_bench_cmd(suite, bench_json_out, threads);
    if (*gen) return run_gen_clients(k, gen_dir);
    if (*print) {
      ParsedProgram p = load_program_file(pfile);
      std::cout << (pdot ? to_dot(p.program) : print_program(p.program, p.is_property));
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInputError;
  } catch (const ProgramError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
