#pragma once

#include <functional>
#include <string>
#include <vector>

namespace mayer {

struct CheckResult {
    std::string id;    // "C1".."C10" for acceptance criteria, module-prefixed otherwise
    std::string name;
    bool passed = false;
    double measured = 0.0;   // worst deviation (or the quantity compared against tolerance)
    double tolerance = 0.0;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    bool fast = false;        // halved caps, tolerances relaxed 10x
    bool sign_fault = false;  // flip a_{11} in every matrix the checks build
};

using CheckCallback = std::function<void(const CheckResult&)>;

// Acceptance criteria 1..10.
std::vector<CheckResult> run_acceptance(const VerifyOptions& opt, const CheckCallback& cb = {});
// Module invariants not already covered by an acceptance criterion.
std::vector<CheckResult> run_invariants(const VerifyOptions& opt, const CheckCallback& cb = {});
// Both of the above.
std::vector<CheckResult> run_all(const VerifyOptions& opt, const CheckCallback& cb = {});

std::string format_check(const CheckResult& r);

}  // namespace mayer
