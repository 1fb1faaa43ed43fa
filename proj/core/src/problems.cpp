#include "urysohn/problems.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "urysohn/quadrature.hpp"

namespace urysohn {

namespace {

constexpr int kReferenceRho = 5;
constexpr int kReferenceM = 4096;
constexpr double kReferenceAgreement = 1e-13;

class ReferenceIntegral {
 public:
  ReferenceIntegral(Kernel kappa, const Evaluable& phi, int m)
      : kappa_(std::move(kappa)), quad_(composite(gauss_legendre(kReferenceRho), m)) {
    phi_at_nodes_.reserve(quad_.nodes().size());
    for (double t : quad_.nodes()) phi_at_nodes_.push_back(phi(t));
  }

  // Neumaier-compensated sum of w_k kappa(s, t_k, phi(t_k)).
  double operator()(double s) const {
    const auto& nodes = quad_.nodes();
    const auto& weights = quad_.weights();
    double sum = 0.0;
    double compensation = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const double term = weights[k] * kappa_(s, nodes[k], phi_at_nodes_[k]);
      const double next = sum + term;
      if (std::abs(sum) >= std::abs(term)) {
        compensation += (sum - next) + term;
      } else {
        compensation += (term - next) + sum;
      }
      sum = next;
    }
    return sum + compensation;
  }

 private:
  Kernel kappa_;
  CompositeQuadrature quad_;
  std::vector<double> phi_at_nodes_;
};

}  // namespace

Evaluable memoize(Evaluable f) {
  struct Cache {
    std::mutex mutex;
    std::unordered_map<double, double> values;
  };
  auto cache = std::make_shared<Cache>();
  return [f = std::move(f), cache](double s) {
    {
      std::lock_guard lock(cache->mutex);
      if (auto it = cache->values.find(s); it != cache->values.end()) return it->second;
    }
    const double value = f(s);
    std::lock_guard lock(cache->mutex);
    cache->values.emplace(s, value);
    return value;
  };
}

Evaluable reference_rhs(const Kernel& kappa, const Evaluable& phi) {
  auto integral = std::make_shared<ReferenceIntegral>(kappa, phi, kReferenceM);
  const ReferenceIntegral doubled(kappa, phi, 2 * kReferenceM);
  for (double s : {0.0, 0.3, 0.5, 0.77, 1.0}) {
    const double diff = std::abs((*integral)(s) - doubled(s));
    if (!(diff <= kReferenceAgreement)) {
      throw std::runtime_error("reference_rhs: reference quadrature self-check failed at s=" + std::to_string(s) +
                               " (difference " + std::to_string(diff) + ")");
    }
  }
  return [integral, phi](double s) { return phi(s) - (*integral)(s); };
}

UrysohnProblem reciprocal_sum_problem() {
  Kernel kappa = [](double s, double t, double u) { return 1.0 / (s + t + u); };
  Kernel dkappa = [](double s, double t, double u) {
    const double d = s + t + u;
    return -1.0 / (d * d);
  };
  Evaluable phi = [](double t) { return 1.0 / (1.0 + t); };
  return UrysohnProblem{"reciprocal-sum", kappa, dkappa, memoize(reference_rhs(kappa, phi)), phi};
}

UrysohnProblem linear_constant_problem() {
  return UrysohnProblem{"linear-constant",
                        [](double, double, double u) { return 0.5 * u; },
                        [](double, double, double) { return 0.5; },
                        [](double) { return 1.0; },
                        Evaluable([](double) { return 2.0; })};
}

UrysohnProblem linear_separable_problem() {
  return UrysohnProblem{"linear-separable",
                        [](double s, double t, double u) { return s * t * u; },
                        [](double s, double t, double) { return s * t; },
                        [](double s) { return 1.0 + s / 6.0; },
                        Evaluable([](double s) { return 1.0 + s; })};
}

std::vector<std::string> problem_ids() { return {"reciprocal-sum", "linear-constant", "linear-separable"}; }

UrysohnProblem find_problem(const std::string& id) {
  if (id == "reciprocal-sum") return reciprocal_sum_problem();
  if (id == "linear-constant") return linear_constant_problem();
  if (id == "linear-separable") return linear_separable_problem();
  throw std::out_of_range("unknown problem id '" + id + "'");
}

}  // namespace urysohn
