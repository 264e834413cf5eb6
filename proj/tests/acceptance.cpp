// One line per acceptance criterion; exit status is the number of failures.
#include <cstdio>
#include <cstring>

#include "mayer/verify.hpp"

int main(int argc, char** argv) {
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    mayer::VerifyOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--fast")) opt.fast = true;
        else if (!std::strcmp(argv[i], "--inject-sign-fault")) opt.sign_fault = true;
        else {
            std::fprintf(stderr, "usage: acceptance [--fast] [--inject-sign-fault]\n");
            return 2;
        }
    }
    int failed = 0;
    mayer::run_acceptance(opt, [&](const mayer::CheckResult& r) {
        failed += !r.passed;
        std::printf("%s\n", mayer::format_check(r).c_str());
    });
    std::printf("%d of 10 criteria failed\n", failed);
    return failed;
}
