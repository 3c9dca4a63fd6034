// Acceptance suite: runs every criterion of the verification grid and prints
// one pass/fail line per criterion. Exit code 0 iff everything passes.

#include <chrono>
#include <cstdio>

#include "oscrep/suite.hpp"

int main() {
  oscrep::suite::Options opts;
  opts.threads = oscrep::suite::threads_from_env();
  std::printf("running acceptance suite with %d thread(s)\n", opts.threads);

  bool ok = true;
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = oscrep::suite::run_all(opts);
  for (const auto& r : results) {
    std::printf("[%s] criterion %d: %s — %s\n", r.ok ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str());
    std::fflush(stdout);
    ok = ok && r.ok;
  }
  const auto seconds =
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0);
  std::printf("%s in %lld s\n", ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED",
              static_cast<long long>(seconds.count()));
  return ok ? 0 : 1;
}
