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

#ifndef ECGSEG_WAVELET_HPP_
#define ECGSEG_WAVELET_HPP_

#include <filesystem>
#include <span>
#include <vector>

#include "ecgseg/types.hpp"

namespace ecgseg::wavelet {

/// Sampled Mexican-hat (Ricker) kernel at scale 2^j:
///   tap(n) = 2^(-j/2) * 2/(sqrt(3)*pi^(1/4))
///            * (1 - (n/2^j)^2) * exp(-(n/2^j)^2 / 2)
/// Taps cover n in [-half_width, half_width]; the kernel is even and its tap
/// sum stays below 1e-6 of the peak tap.
struct WaveletKernel {
  int scale_exponent = 2;
  int half_width = 0;
  std::vector<double> taps;  // taps[half_width + n]

  double tap(int n) const { return taps[static_cast<std::size_t>(half_width + n)]; }
};

// Support half-width in units of the scale 2^j. Eight scale units keep the
// truncated tap sum near 1e-12 relative to the peak tap; five leaves ~1e-4,
// which breaks admissibility.
inline constexpr int kSupportScaleUnits = 8;

WaveletKernel mexican_hat_kernel(int scale_exponent);

inline constexpr int kDefaultScaleExponents[] = {2, 3, 4};

/// Correlates the signal with one kernel per scale exponent, zero-padded at
/// the boundaries: out(n, k) = sum_m signal[m] * tap_k(m - n).
FeatureMatrix cwt(std::span<const double> signal,
                  std::span<const int> scale_exponents);

/// In-place per-column standardization to zero mean / unit variance.
/// Constant columns are left centered. Off by default everywhere.
void zscore_columns(FeatureMatrix& features);

/// Feature dump: `index,w4,w8,w16` (column names carry the scale 2^j).
void write_feature_csv(const std::filesystem::path& path,
                       const FeatureMatrix& features,
                       std::span<const int> scale_exponents,
                       bool header = true);

struct FeatureFile {
  FeatureMatrix features;
  std::vector<int> scale_exponents;  // recovered from the header row
};
FeatureFile read_feature_csv(const std::filesystem::path& path);

}  // namespace ecgseg::wavelet

#endif  // ECGSEG_WAVELET_HPP_
