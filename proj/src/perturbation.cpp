#include "lrd/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lrd/errors.hpp"
#include "lrd/svd.hpp"

namespace lrd::linalg {

double PerturbationReport::min_slack() const {
  return std::min({mirsky_frobenius_slack, mirsky_spectral_slack, weyl_min_slack, kyfan_slack});
}

PerturbationReport perturbation_inequalities_report(const Matrix& a, const Matrix& b,
                                                    std::int64_t k) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ParameterError("perturbation_inequalities_report: shape mismatch");
  }
  const std::int64_t s = std::min(a.rows(), a.cols());
  if (k < 1 || k > s) {
    throw ParameterError("perturbation_inequalities_report: k out of range");
  }
  const Vector sa = singular_values(a);
  const Vector sb = singular_values(b);
  const Vector ssum = singular_values(a + b);
  const Matrix diff = a - b;

  PerturbationReport report{};
  report.mirsky_frobenius_slack = diff.norm() - (sa - sb).norm();
  report.mirsky_spectral_slack = operator_norm(diff) - (sa - sb).cwiseAbs().maxCoeff();

  // Weyl over the i = j pairs, i.e. sigma_{2i-1}(A+B) <= sigma_i(A)+sigma_i(B).
  double weyl = std::numeric_limits<double>::infinity();
  for (std::int64_t i = 1; 2 * i - 1 <= s; ++i) {
    weyl = std::min(weyl, sa(i - 1) + sb(i - 1) - ssum(2 * i - 2));
  }
  report.weyl_min_slack = weyl;

  auto head_l2 = [k](const Vector& v) {
    return std::sqrt(v.head(k).squaredNorm());
  };
  report.kyfan_slack = head_l2(sa) + head_l2(sb) - head_l2(ssum);
  return report;
}

}  // namespace lrd::linalg
