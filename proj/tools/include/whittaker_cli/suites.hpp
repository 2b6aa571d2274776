#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "whittaker/mellin_barnes.hpp"
#include "whittaker/params.hpp"
#include "whittaker/radial.hpp"

namespace whittaker::cli {

struct SuiteOptions {
    std::uint64_t seed = 20251015;
    int threads = 1;
};

struct SuiteResult {
    std::string name;
    int criterion = 0;  // acceptance criterion number, 0 for extra suites
    bool passed = false;
    double seconds = 0;
    std::string summary;
    nlohmann::json detail;
};

// All suite names in run order. The first eleven map to criteria 1..11.
const std::vector<std::string>& suite_names();
// 0 when the suite is not tied to a criterion; throws for unknown names.
int suite_criterion(const std::string& name);
// Unknown names throw ParameterError. Exceptions inside a suite are
// reported as a failed result rather than propagated.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);
nlohmann::json to_json(const SuiteResult& r);

// Fixed instances shared by the suites, the tests and the benchmarks.
struct Instance {
    HCParam L;
    DistinguishedPattern dp;
    ExponentSystem es;
    std::string label;
};
// n=3, Lambda=(7,3,1;5), Q_2^+ with q_{2,1}=2: alpha=(6,4).
Instance instance_n2_system();
// n=4, Lambda=(7,4,2,0;6): first distinguished pattern with N2=4.
Instance instance_n4_system();
// n=2, Lambda=(20,0;1), Q_1^+: alpha=(20,1), used for the t2 -> 0 limit.
Instance instance_leading();

// Pointwise residual |op f| / sum_k |term_k f| for a series f.
double pointwise_residual(const EulerOp& op, const MBSeries& f, double t1, double t2);

}  // namespace whittaker::cli
