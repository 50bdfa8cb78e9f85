// one PASS/FAIL line per acceptance criterion
#include "rtf/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240601;
    int failed = 0;
    for (int id = 1; id <= 10; ++id) {
        rtf::CheckResult r = rtf::criterion(id, seed);
        std::printf("%s criterion %d: %s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL", id, r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
        failed += !r.pass;
    }
    std::printf("%d/10 criteria passed\n", 10 - failed);
    return failed ? 1 : 0;
}
