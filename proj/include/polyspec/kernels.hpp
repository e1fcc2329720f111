#pragma once

#include "polyspec/fourier.hpp"

#include <vector>

namespace polyspec {

/// Evaluates one plan at many frequencies, in input order. Reference version.
std::vector<ComplexValue> evaluate_batch_serial(const MeasurePlan& plan, const std::vector<Frequency>& xis,
                                                const Precision& precision = {});

/// Same contract, one frequency per OpenMP iteration. Each result depends
/// only on its own frequency, so output is identical to the serial version
/// for any thread count. The first failing index (lowest) is rethrown.
std::vector<ComplexValue> evaluate_batch(const MeasurePlan& plan, const std::vector<Frequency>& xis,
                                         const Precision& precision = {});

}  // namespace polyspec
