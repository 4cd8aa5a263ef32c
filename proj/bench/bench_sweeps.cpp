// Compares the serial reference case runner against the OpenMP work queue
// on the verification sweeps.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "macd/verify.hpp"

using namespace macd;
using Clock = std::chrono::steady_clock;

namespace {

long time_ms(const std::function<void()>& fn) {
  auto start = Clock::now();
  fn();
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

std::string render(const std::vector<CaseReport>& reports) {
  std::string out;
  for (const auto& r : reports)
    out += r.case_id + (r.ok ? "+" : "-");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  int jobs = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  VerifyOptions serial_opt;
  serial_opt.max_size = 6;
  serial_opt.k_max = 3;
  serial_opt.max_weight = 3;
  serial_opt.pieri_k_max = 2;
  serial_opt.degree_bound = 6;
  serial_opt.jobs = 1;
  VerifyOptions par_opt = serial_opt;
  par_opt.jobs = jobs;

  std::printf("%-28s %10s %10s %8s  identical\n", "sweep", "serial ms",
              "parallel", "speedup");

  struct Row {
    const char* name;
    std::function<std::vector<CaseReport>(const VerifyOptions&)> fn;
  };
  std::vector<Row> rows = {
      {"ti equivariance", [](const VerifyOptions& o) { return verify_ti(o); }},
      {"pieri matching", [](const VerifyOptions& o) { return verify_pieri(o); }},
      {"e1 three-way", [](const VerifyOptions& o) { return verify_e1(o); }},
      {"oracle expansion", [](const VerifyOptions& o) { return verify_oracle(o); }},
  };

  for (const auto& row : rows) {
    std::vector<CaseReport> a, b;
    long ms_serial = time_ms([&] { a = row.fn(serial_opt); });
    long ms_par = time_ms([&] { b = row.fn(par_opt); });
    std::printf("%-28s %10ld %10ld %7.2fx  %s\n", row.name, ms_serial, ms_par,
                ms_par > 0 ? static_cast<double>(ms_serial) / ms_par : 0.0,
                render(a) == render(b) ? "yes" : "NO");
    std::fflush(stdout);
  }
  return 0;
}
