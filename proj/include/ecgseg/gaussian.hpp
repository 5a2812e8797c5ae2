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

#ifndef ECGSEG_GAUSSIAN_HPP_
#define ECGSEG_GAUSSIAN_HPP_

#include <Eigen/Dense>

#include "ecgseg/types.hpp"

namespace ecgseg::hmm {

/// Log density of the multivariate normal N(mean, cov) at x.
/// Throws Error when cov is not symmetric positive-definite.
double log_gaussian_pdf(const Eigen::VectorXd& x, const Eigen::VectorXd& mean,
                        const Eigen::MatrixXd& cov);

/// Cholesky-backed evaluator for repeated densities of one state.
class GaussianLogPdf {
 public:
  GaussianLogPdf(Eigen::VectorXd mean, const Eigen::MatrixXd& cov);

  double operator()(const Eigen::VectorXd& x) const;

 private:
  Eigen::VectorXd mean_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  double log_norm_ = 0.0;  // -(d/2) log(2 pi) - (1/2) log|cov|
};

}  // namespace ecgseg::hmm

#endif  // ECGSEG_GAUSSIAN_HPP_
