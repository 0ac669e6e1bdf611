#pragma once

#include "spinlink/scalar.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace spinlink {

/// What a check's deviation is supposed to do. `Fail` inverts the pass flag
/// (the identity is expected to break, e.g. octonionic commutators); `Record`
/// entries are observational and never fail a run.
enum class Expectation { Hold, Fail, Record };

inline const char* to_string(Expectation e) {
    switch (e) {
        case Expectation::Hold: return "hold";
        case Expectation::Fail: return "fail";
        default: return "record";
    }
}

/// One verified identity: id, which law it tests, arithmetic mode, the
/// maximal deviation found, and the resulting pass flag.
struct CheckResult {
    std::string check_id;
    std::string ref;
    std::string mode;
    std::string deviation;
    bool passed = false;
    Expectation expected = Expectation::Hold;
};

inline std::string float_str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline CheckResult exact_check(std::string id, std::string ref, const Rational& dev,
                               Expectation expected = Expectation::Hold) {
    CheckResult r;
    r.check_id = std::move(id);
    r.ref = std::move(ref);
    r.mode = "exact";
    r.deviation = rational_str(dev);
    const bool zero = dev == 0;
    r.expected = expected;
    r.passed = expected == Expectation::Fail ? !zero : zero;
    return r;
}

inline CheckResult float_check(std::string id, std::string ref, double dev, double tol,
                               Expectation expected = Expectation::Hold) {
    CheckResult r;
    r.check_id = std::move(id);
    r.ref = std::move(ref);
    r.mode = "float";
    r.deviation = float_str(dev);
    const bool within = dev <= tol;
    r.expected = expected;
    r.passed = expected == Expectation::Fail ? !within : within;
    return r;
}

/// Mode-dispatched helper so templated suites can emit either kind.
inline CheckResult make_check(std::string id, std::string ref, const Rational& dev, double /*tol*/,
                              Expectation expected = Expectation::Hold) {
    return exact_check(std::move(id), std::move(ref), dev, expected);
}
inline CheckResult make_check(std::string id, std::string ref, double dev, double tol,
                              Expectation expected = Expectation::Hold) {
    return float_check(std::move(id), std::move(ref), dev, tol, expected);
}

inline bool all_required_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (c.expected != Expectation::Record && !c.passed) return false;
    return true;
}

}  // namespace spinlink
