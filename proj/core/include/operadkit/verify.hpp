#pragma once

#include <functional>
#include <string>
#include <vector>

#include "operadkit/presentations.hpp"

namespace operadkit {

struct CheckResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::vector<std::string> details;  // one line per sub-check
    double seconds = 0;
    double budget_seconds = 0;         // 0 when the check is not timed
};

/// sLeib in the bracket/diamond basis with the Jacobi identity moved from
/// the bracket onto the symmetric product. Its series fails the inversion
/// test at arity 5.
Presentation mutilated_sleib();

/// The eight end-to-end checks, in order. `on_result` is called as soon as
/// each check finishes.
std::vector<CheckResult> run_acceptance(const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace operadkit
