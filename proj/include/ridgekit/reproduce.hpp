#pragma once

#include <string>
#include <vector>

#include "ridgekit/common.hpp"

namespace ridgekit {

/** One verified identity: the measured value, what it should be, and the
 * tolerance it was held to (0 means bitwise).
 */
struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0.0;
    double target = 0.0;
    double tol = 0.0;
    std::string detail;
};

/** The standard worked examples, end to end:
 *   - squared distance of the product function x*y from the axis ridge span,
 *   - projection and distance of a two-ridge sum,
 *   - orthonormality of the lattice exponentials (exact and by quadrature),
 *   - the separable two-bump hat against its closed displayed form.
 * Deterministic; every CheckResult carries the measured numbers.
 */
std::vector<CheckResult> standard_checks();

}  // namespace ridgekit
