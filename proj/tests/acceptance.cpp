// Acceptance suite runner: one pass/fail line per criterion, nonzero exit on
// any failure. Artifacts land under ./acceptance_artifacts.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "xorsat/selftest.hpp"

int main(int argc, char** argv) {
    xorsat::SelftestOptions opt;
    opt.seed = 1;
    opt.threads = int(std::thread::hardware_concurrency());
    if (opt.threads < 1) opt.threads = 1;
    opt.out_dir = "acceptance_artifacts";
    if (argc > 1) opt.seed = std::strtoull(argv[1], nullptr, 10);

    const auto results = xorsat::run_acceptance(opt, &std::cout);
    int failures = 0;
    for (const auto& r : results) failures += r.pass ? 0 : 1;
    std::printf("%zu criteria, %d failed\n", results.size(), failures);
    return failures;
}
