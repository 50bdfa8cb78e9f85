// verify.hpp - the dual-path checks behind `rtf verify` and the acceptance binary
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rtf {

struct CheckResult {
    int criterion = 0;  // 1..10, or 0 for a supporting invariant
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// numbered acceptance criteria
CheckResult criterion(int id, std::uint64_t seed);

// suites: ntransform, weights, unipotent, orbital, arch, lattice, assembly, all
std::vector<std::string> suite_names();
// results in a fixed order; jobs > 1 runs the checks on a worker pool
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed, int jobs = 1);

}  // namespace rtf
