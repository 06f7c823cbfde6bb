// Benchmarks the group algebra product kernel against the serial
// reference implementation and checks that they agree.

#include <chrono>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "ringunits/catalog.hpp"
#include "ringunits/galg.hpp"

using namespace ringunits;
using Clock = std::chrono::steady_clock;

namespace {

GAElem random_elem(const GroupPtr& g, std::mt19937_64& rng, double density) {
  std::uniform_real_distribution<double> pick(0.0, 1.0);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  GAElem x(g);
  for (int i = 0; i < g->order; ++i) {
    if (pick(rng) > density) continue;
    long n = num(rng);
    if (n == 0) n = 1;
    x.set(i, Rational(n) / Rational(den(rng)));
  }
  return x;
}

double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ga_product benchmark"};
  std::string group = "240_89";
  int rounds = 20;
  double density = 0.8;
  unsigned long seed = 1;
  app.add_option("--group", group, "catalog group name");
  app.add_option("--rounds", rounds, "number of products per kernel");
  app.add_option("--density", density, "support density of the operands");
  app.add_option("--seed", seed, "RNG seed");
  CLI11_PARSE(app, argc, argv);

  GroupPtr g;
  try {
    g = catalog_group(group);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  std::mt19937_64 rng(seed);
  std::vector<std::pair<GAElem, GAElem>> ops;
  for (int r = 0; r < rounds; ++r)
    ops.emplace_back(random_elem(g, rng, density), random_elem(g, rng, density));

  auto t0 = Clock::now();
  std::vector<GAElem> fast;
  for (auto& [x, y] : ops) fast.push_back(ga_product(x, y));
  auto t1 = Clock::now();
  std::vector<GAElem> ref;
  for (auto& [x, y] : ops) ref.push_back(ga_product_serial(x, y));
  auto t2 = Clock::now();

  for (int r = 0; r < rounds; ++r) {
    if (!(fast[r] == ref[r])) {
      std::cerr << "MISMATCH between kernels at round " << r << "\n";
      return 1;
    }
  }
  double tf = seconds(t0, t1), ts = seconds(t1, t2);
  std::cout << "group " << group << "  order " << g->order << "  rounds "
            << rounds << "\n"
            << "parallel: " << tf << " s  (" << tf / rounds << " s/product)\n"
            << "serial:   " << ts << " s  (" << ts / rounds << " s/product)\n"
            << "speedup:  " << ts / tf << "x\n"
            << "kernels agree on all rounds\n";
  return 0;
}
