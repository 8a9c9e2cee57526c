#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "acceptance.hpp"

// Usage: acceptance [--update-golden] [criterion numbers...]
int main(int argc, char** argv) {
  using acceptance::Result;
  bool update = false;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--update-golden") == 0) {
      update = true;
    } else {
      only.insert(std::atoi(argv[i]));
    }
  }
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"normal-form soundness", acceptance::normal_form_soundness},
      {"kernel conditions", acceptance::kernel_conditions},
      {"cube-complex reproductions", acceptance::complex_reproductions},
      {"specialness suite", acceptance::specialness_suite},
      {"embedding certification", acceptance::embedding_certification},
      {"7-vertex census dichotomy", acceptance::census_dichotomy},
      {"Artin/Coxeter divergence", acceptance::raag_racg_divergence},
      {"CLI determinism", [update] { return acceptance::cli_determinism(update); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(number)) continue;
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d %s: %s [%.1fs] %s\n", number, criteria[i].first.c_str(), r.pass ? "PASS" : "FAIL", secs,
                r.detail.c_str());
    std::fflush(stdout);
    failed += !r.pass;
  }
  return failed == 0 ? 0 : 1;
}
