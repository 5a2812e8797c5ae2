// Copyright 2026 The ecgseg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ecgseg/gaussian.hpp"

#include <cmath>
#include <numbers>

namespace ecgseg::hmm {

GaussianLogPdf::GaussianLogPdf(Eigen::VectorXd mean,
                               const Eigen::MatrixXd& cov)
    : mean_(std::move(mean)) {
  if (cov.rows() != cov.cols() || cov.rows() != mean_.size()) {
    throw Error("covariance shape does not match the mean");
  }
  if (!cov.isApprox(cov.transpose(), 1e-12)) {
    throw Error("covariance is not symmetric");
  }
  llt_.compute(cov);
  if (llt_.info() != Eigen::Success ||
      (llt_.matrixLLT().diagonal().array() <= 0.0).any()) {
    throw Error("covariance is not positive-definite");
  }
  const double d = static_cast<double>(mean_.size());
  const double log_det =
      2.0 * llt_.matrixLLT().diagonal().array().log().sum();
  log_norm_ = -0.5 * (d * std::log(2.0 * std::numbers::pi) + log_det);
}

double GaussianLogPdf::operator()(const Eigen::VectorXd& x) const {
  // Mahalanobis term via the Cholesky factor: solve L y = (x - mean).
  Eigen::VectorXd y = llt_.matrixL().solve(x - mean_);
  return log_norm_ - 0.5 * y.squaredNorm();
}

double log_gaussian_pdf(const Eigen::VectorXd& x, const Eigen::VectorXd& mean,
                        const Eigen::MatrixXd& cov) {
  return GaussianLogPdf(mean, cov)(x);
}

}  // namespace ecgseg::hmm
