#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace dtm {

struct SimplexOptions {
  /// Converged once max f - min f over the simplex is at most ftol (absolute)...
  double ftol = 1e-9;
  /// ...and every vertex lies within xtol (max-norm) of the best one.
  double xtol = 1e-8;
  std::size_t max_iterations = 2000;
};

struct SimplexResult {
  std::vector<double> x;
  double f = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Derivative-free minimization by the Nelder-Mead simplex method with the
/// standard coefficients (reflect 1, expand 2, contract 1/2, shrink 1/2).
/// The initial simplex is x0 plus x0 + steps[i] e_i. Non-finite objective
/// values, including +inf barriers, are treated as worse than any finite value.
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> x0, const std::vector<double>& steps,
                          const SimplexOptions& opts = {});

}  // namespace dtm
