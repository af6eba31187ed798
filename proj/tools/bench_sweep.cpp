#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "rq/finoracle.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double run_once(const rq::SweepSpec& spec,
                std::vector<rq::SweepOutcome>* out) {
  auto t0 = Clock::now();
  *out = rq::sweep_crosscheck(spec);
  auto t1 = Clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

bool same_outcomes(const std::vector<rq::SweepOutcome>& a,
                   const std::vector<rq::SweepOutcome>& b) {
  if (a.size() != b.size()) return false;
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k].ok != b[k].ok || a[k].detail != b[k].detail ||
        a[k].open_questions != b[k].open_questions)
      return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crosscheck sweep: serial reference vs parallel"};
  rq::SweepSpec spec;
  app.add_option("--max-n", spec.n_hi, "largest base modulus");
  app.add_option("--full-upto", spec.full_upto, "exhaustive (a,b) up to n");
  app.add_option("--pairs", spec.random_pairs, "sampled pairs per (n,d)");
  app.add_option("--seed", spec.seed, "sampling seed");
  CLI11_PARSE(app, argc, argv);

  std::vector<rq::SweepOutcome> serial, parallel;
  spec.parallel = false;
  double ts = run_once(spec, &serial);
  spec.parallel = true;
  double tp = run_once(spec, &parallel);

  size_t failures = 0;
  for (auto& o : serial)
    if (!o.ok) ++failures;

  std::cout << "instances: " << serial.size() << "\n"
            << "mismatches: " << failures << "\n"
            << "serial:   " << ts << " s\n"
            << "parallel: " << tp << " s\n"
            << "speedup:  " << (tp > 0 ? ts / tp : 0.0) << "x\n";

  if (!same_outcomes(serial, parallel)) {
    std::cerr << "serial and parallel sweeps disagree\n";
    return 1;
  }
  return failures ? 1 : 0;
}
