#include "agr/bench.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <thread>

#include "agr/automata.hpp"
#include "agr/dsl.hpp"

namespace agr {

namespace fs = std::filesystem;

BenchInstance load_instance(const std::string& dir) {
  BenchInstance in;
  fs::path d(dir);
  in.name = d.filename().string();
  in.m1 = load_program_file((d / "m1.agr").string()).program;
  in.m2 = load_program_file((d / "m2.agr").string()).program;
  in.p = load_program_file((d / "prop.agr").string()).program;
  Json meta = Json::parse(read_file((d / "meta.json").string()));
  in.family = meta.value("family", "");
  if (meta.contains("methods"))
    for (const auto& m : meta["methods"]) in.methods.push_back(parse_method(m.get<std::string>()));
  if (in.methods.empty()) in.methods.push_back(RepairMethod::Exact);
  return in;
}

std::vector<BenchInstance> load_suite(const std::string& dir) {
  std::vector<std::string> dirs;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_directory() && fs::exists(e.path() / "meta.json")) dirs.push_back(e.path().string());
  std::sort(dirs.begin(), dirs.end());
  std::vector<BenchInstance> out;
  for (const auto& d : dirs) {
    Json meta = Json::parse(read_file((fs::path(d) / "meta.json").string()));
    if (!meta.value("bench", true)) continue;
    out.push_back(load_instance(d));
  }
  return out;
}

std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& suite, const AgrConfig& base, size_t threads) {
  std::vector<std::pair<size_t, RepairMethod>> jobs;
  for (size_t i = 0; i < suite.size(); ++i)
    for (auto m : suite[i].methods) jobs.emplace_back(i, m);
  std::vector<BenchRow> rows(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t j; (j = next.fetch_add(1)) < jobs.size();) {
      const BenchInstance& in = suite[jobs[j].first];
      AgrConfig cfg = base;
      cfg.repair_method = jobs[j].second;
      AgrOutcome out = run_agr(in.m1, in.m2, in.p, cfg);
      BenchRow& r = rows[j];
      r.example = in.name;
      r.family = in.family;
      r.m1_size = in.m1.size();
      r.m2_size = in.m2.size();
      r.p_size = in.p.size();
      r.time_s = out.wall_ms / 1000.0;
      r.assumption_size = out.assumption ? live_states(*out.assumption) : 0;
      r.repair_size = out.repairs ? out.repaired_m2.size() : 0;
      r.method = method_name(cfg.repair_method);
      r.iterations = out.iterations;
      r.repairs = out.repairs;
      r.outcome = outcome_name(out.kind);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<size_t>(jobs.size(), 1));
  std::vector<std::thread> pool;
  for (size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

Json bench_json(const std::vector<BenchRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) {
    a.push_back({{"example", r.example},
                 {"family", r.family},
                 {"m1_size", r.m1_size},
                 {"m2_size", r.m2_size},
                 {"p_size", r.p_size},
                 {"time_s", r.time_s},
                 {"assumption_size", r.assumption_size},
                 {"repair_size", r.repair_size},
                 {"method", r.method},
                 {"iterations", r.iterations},
                 {"repairs", r.repairs},
                 {"outcome", r.outcome}});
  }
  return Json{{"schema", "agr-bench/1"}, {"rows", a}};
}

ClientFamily make_client_family(size_t k) {
  ClientFamily f;
  // Server: accept a request, acknowledge it.
  Program& m1 = f.m1;
  m1.set_name("server");
  m1.add_var("y");
  m1.add_channel("req");
  m1.add_channel("ack");
  StateId s0 = m1.add_state("p0", true), s1 = m1.add_state("p1");
  m1.add_transition(s0, Action::read("req", "y"), s1);
  m1.add_transition(s1, Action::write("ack", "y"), s0);

  // Clients: c0 (start) -req-> c1 -ack-> c2 -req-> c1 ...; idle states accept.
  Program& m2 = f.m2;
  m2.set_name("clients" + std::to_string(k));
  m2.add_channel("req");
  m2.add_channel("ack");
  m2.add_channel("bad");
  for (size_t i = 1; i <= k; ++i) m2.add_var("x" + std::to_string(i));
  size_t total = 1;
  for (size_t i = 0; i < k; ++i) total *= 3;
  auto digits = [&](size_t code) {
    std::vector<int> d(k);
    for (size_t i = 0; i < k; ++i) {
      d[i] = static_cast<int>(code % 3);
      code /= 3;
    }
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    size_t c = 0;
    for (size_t i = k; i-- > 0;) c = c * 3 + static_cast<size_t>(d[i]);
    return c;
  };
  for (size_t c = 0; c < total; ++c) {
    auto d = digits(c);
    std::string n = "q";
    bool acc = true;
    for (int x : d) {
      n += std::to_string(x);
      if (x == 1) acc = false;
    }
    m2.add_state(n, acc);
  }
  m2.set_initial(0);
  for (size_t c = 0; c < total; ++c) {
    auto d = digits(c);
    for (size_t i = 0; i < k; ++i) {
      std::string x = "x" + std::to_string(i + 1);
      auto e = d;
      if (d[i] == 0 || d[i] == 2) {
        e[i] = 1;
        m2.add_transition(static_cast<StateId>(c), Action::write("req", x), static_cast<StateId>(encode(e)));
      } else {
        e[i] = 2;
        m2.add_transition(static_cast<StateId>(c), Action::read("ack", x), static_cast<StateId>(encode(e)));
      }
    }
  }
  // Faulty start-up: client 1 reports completion without a request.
  std::vector<int> idle(k, 0);
  idle[0] = 2;
  m2.add_transition(0, Action::write("bad", "x1"), static_cast<StateId>(encode(idle)));

  // Property: a fault must be followed by a request.
  Program& p = f.p;
  p.set_name("no_silent_fault");
  p.add_var("y");
  p.add_channel("req");
  p.add_channel("bad");
  for (size_t i = 1; i <= k; ++i) p.add_var("x" + std::to_string(i));
  StateId r0 = p.add_state("r0", true), r1 = p.add_state("r1");
  p.add_transition(r0, Action::write("bad", "x1"), r1);
  for (size_t i = 1; i <= k; ++i) {
    Action s = Action::sync("req", "x" + std::to_string(i), "y");
    p.add_transition(r0, s, r0);
    p.add_transition(r1, s, r0);
  }
  return f;
}

}  // namespace agr
