#include "polyspec/kernels.hpp"

#include <exception>

namespace polyspec {

std::vector<ComplexValue> evaluate_batch_serial(const MeasurePlan& plan, const std::vector<Frequency>& xis,
                                                const Precision& precision) {
  std::vector<ComplexValue> out;
  out.reserve(xis.size());
  for (const auto& xi : xis) out.push_back(plan.evaluate(xi, precision));
  return out;
}

std::vector<ComplexValue> evaluate_batch(const MeasurePlan& plan, const std::vector<Frequency>& xis,
                                         const Precision& precision) {
  const long n = static_cast<long>(xis.size());
  std::vector<ComplexValue> out(xis.size());
  std::vector<std::exception_ptr> errors(xis.size());

#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = plan.evaluate(xis[i], precision);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace polyspec
