// Runs every acceptance criterion with pinned parameters and prints one
// PASS/FAIL line per criterion. Exit status is 0 only if all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "thetawpo/verify.hpp"

using namespace thetawpo;

namespace {

struct Run {
  std::string suite;
  SuiteParams params;
};

struct Criterion {
  int number;
  std::string name;
  std::vector<Run> runs;
};

SuiteParams with(std::size_t size, std::optional<std::size_t> samples = std::nullopt) {
  SuiteParams p;
  p.size = size;
  p.samples = samples;
  p.seed = 20240601;
  return p;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> cs = {
      {1, "order-axioms", {{"order-axioms", with(3)}}},
      {2, "theta-criterion", {{"theta-criterion", with(3, 100000)}}},
      {3, "coeff-lemmas", {{"coeff-lemmas", with(5, 10000)}}},
      {4, "g-monotone/encode-monotone", {{"g-monotone", with(4)}, {"encode-monotone", with(4)}}},
      {5, "tleq-fixpoint", {{"tleq-fixpoint", with(5)}}},
      {6, "iso", {{"iso", with(8)}}},
      {7, "gap-oracle", {{"gap-oracle", with(7)}}},
      {8, "higman-oracle", {{"higman-oracle", with(5)}}},
      {9, "quasi-embedding", {{"quasi-embedding", with(3, 10000)}}},
      {10, "xstarstar-cases", {{"xstarstar-cases", with(6)}}},
      {11, "fixtures", {{"fixtures", {}}}},
  };
  return cs;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::stoi(argv[i]));
  bool all_passed = true;
  for (const Criterion& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.number) == only.end()) continue;
    auto start = std::chrono::steady_clock::now();
    bool passed = true;
    std::uint64_t checked = 0;
    std::string details;
    for (const Run& run : c.runs) {
      SuiteReport r = run_suite(run.suite, run.params);
      checked += r.checked;
      if (r.checked == 0 || !r.passed()) {
        passed = false;
        details += to_text(r);
      }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d %-28s %s  checked=%llu  %.1fs\n", c.number, c.name.c_str(), passed ? "PASS" : "FAIL",
                static_cast<unsigned long long>(checked), secs);
    if (!passed) std::cout << details;
    std::fflush(stdout);
    all_passed = all_passed && passed;
  }
  return all_passed ? 0 : 1;
}
