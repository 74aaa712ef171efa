#include "dtm/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dtm {

namespace {

double sanitize(double v) {
  return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
}

}  // namespace

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> x0, const std::vector<double>& steps,
                          const SimplexOptions& opts) {
  const std::size_t dim = x0.size();
  if (steps.size() != dim || dim == 0) throw std::invalid_argument("nelder_mead: bad dimensions");

  std::vector<std::vector<double>> pts(dim + 1, x0);
  for (std::size_t i = 0; i < dim; ++i) pts[i + 1][i] += steps[i];
  std::vector<double> fv(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) fv[i] = sanitize(f(pts[i]));

  std::vector<std::size_t> order(dim + 1);
  std::vector<double> centroid(dim), trial(dim), trial2(dim);
  auto along = [&](double coef, const std::vector<double>& worst, std::vector<double>& out) {
    for (std::size_t j = 0; j < dim; ++j) out[j] = centroid[j] + coef * (worst[j] - centroid[j]);
  };

  SimplexResult res;
  std::size_t it = 0;
  for (;; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[dim - 1];

    if (std::isfinite(fv[worst]) && fv[worst] - fv[best] <= opts.ftol) {
      double spread = 0.0;
      for (std::size_t i = 0; i <= dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          spread = std::max(spread, std::fabs(pts[i][j] - pts[best][j]));
      if (spread <= opts.xtol) {
        res.converged = true;
        break;
      }
    }
    if (it >= opts.max_iterations) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < dim; ++j) centroid[j] += pts[i][j];
    }
    for (auto& c : centroid) c /= static_cast<double>(dim);

    along(-1.0, pts[worst], trial);
    const double fr = sanitize(f(trial));
    if (fr < fv[best]) {
      along(-2.0, pts[worst], trial2);
      const double fe = sanitize(f(trial2));
      if (fe < fr) {
        pts[worst] = trial2;
        fv[worst] = fe;
      } else {
        pts[worst] = trial;
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second]) {
      pts[worst] = trial;
      fv[worst] = fr;
      continue;
    }
    // Contraction: outside when the reflected point beats the worst, inside otherwise.
    const bool outside = fr < fv[worst];
    along(outside ? -0.5 : 0.5, pts[worst], trial2);
    const double fc = sanitize(f(trial2));
    if (fc < (outside ? fr : fv[worst])) {
      pts[worst] = trial2;
      fv[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < dim; ++j) pts[i][j] = pts[best][j] + 0.5 * (pts[i][j] - pts[best][j]);
      fv[i] = sanitize(f(pts[i]));
    }
  }

  const auto best = static_cast<std::size_t>(std::min_element(fv.begin(), fv.end()) - fv.begin());
  res.x = pts[best];
  res.f = fv[best];
  res.iterations = it;
  return res;
}

}  // namespace dtm
