// Runs the suites tied to acceptance criteria 1..11 and prints one line each.
#include <cstdio>
#include <cstdlib>

#include "whittaker_cli/parallel.hpp"
#include "whittaker_cli/suites.hpp"

int main() {
    using namespace whittaker::cli;
    SuiteOptions opt;
    opt.threads = resolve_threads(static_cast<int>(std::thread::hardware_concurrency()));
    int failed = 0;
    for (const auto& name : suite_names()) {
        const int c = suite_criterion(name);
        if (c == 0) continue;
        const SuiteResult r = run_suite(name, opt);
        std::printf("%s criterion %d (%s) [%.2f s] %s\n", r.passed ? "PASS" : "FAIL", c, name.c_str(), r.seconds,
                    r.summary.c_str());
        std::fflush(stdout);
        if (!r.passed) ++failed;
    }
    std::printf("%d of 11 criteria failed\n", failed);
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
