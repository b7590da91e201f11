#pragma once

#include "agr/export.hpp"

namespace agr {

struct BenchInstance {
  std::string name;
  std::string family;
  Program m1, m2, p;
  std::vector<RepairMethod> methods;
};

struct BenchRow {
  std::string example;
  std::string family;
  size_t m1_size = 0, m2_size = 0, p_size = 0;
  double time_s = 0;
  size_t assumption_size = 0;
  size_t repair_size = 0;
  std::string method;
  size_t iterations = 0;
  size_t repairs = 0;
  std::string outcome;
};

// Every subdirectory with m1.agr, m2.agr, prop.agr and meta.json, in name order.
std::vector<BenchInstance> load_suite(const std::string& dir);
BenchInstance load_instance(const std::string& dir);

// Runs every (instance, method) pair on a pool of worker threads; rows keep suite order.
std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& suite, const AgrConfig& base, size_t threads = 0);
Json bench_json(const std::vector<BenchRow>& rows);

// Server M1, k interleaved three-state clients in M2 (3^k states, one faulty
// start-up edge) and a two-state property.
struct ClientFamily {
  Program m1, m2, p;
};
ClientFamily make_client_family(size_t k);

}  // namespace agr
