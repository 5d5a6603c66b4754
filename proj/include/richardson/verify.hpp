#pragma once

#include <string>
#include <vector>

namespace rich {

struct CheckResult {
    std::string name;
    bool passed = true;
    int cases = 0;
    std::string detail;  // first failing case, empty when passing
};

/// Runs the consistency suites over every comparable pair of d-subsets of
/// [n]: recursion equivalences, point-count polynomial identities, diagram
/// node counts against the closed formulas, the Deodhar comparison, the
/// model complex (d^2 = 0, shift constancy, Euler characteristic), the
/// category-O crosscheck, and (when prime > 0) the finite field oracle.
std::vector<CheckResult> run_verification(int n, int d, int prime);

}  // namespace rich
