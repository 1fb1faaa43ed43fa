#pragma once

#include <string>
#include <vector>

#include "urysohn/operator.hpp"

namespace urysohn {

/// Thread-safe memo of a pure function of one double.
Evaluable memoize(Evaluable f);

/// f(s) = phi(s) - int_0^1 kappa(s, t, phi(t)) dt, with the integral taken by a
/// compensated 5-point composite Gauss rule on 4096 subintervals. On
/// construction the rule is checked against 8192 subintervals at a few probe
/// points and must agree to 1e-13; std::runtime_error otherwise.
Evaluable reference_rhs(const Kernel& kappa, const Evaluable& phi);

/// kappa = 1/(s + t + u), phi(t) = 1/(1 + t), rhs from reference_rhs.
UrysohnProblem reciprocal_sum_problem();

/// kappa = u/2, f = 1, phi = 2.
UrysohnProblem linear_constant_problem();

/// kappa = s t u, f = 1 + s/6, phi = 1 + s.
UrysohnProblem linear_separable_problem();

/// Registry ids: "reciprocal-sum", "linear-constant", "linear-separable".
std::vector<std::string> problem_ids();

/// Throws std::out_of_range for unknown ids.
UrysohnProblem find_problem(const std::string& id);

}  // namespace urysohn
