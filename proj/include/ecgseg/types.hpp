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

#ifndef ECGSEG_TYPES_HPP_
#define ECGSEG_TYPES_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace ecgseg {

// Complexes in chain order. This order fixes the state layout and the
// left-to-right transition chain P -> PQ -> QRS -> ST -> T -> ISO.
enum class Complex : int { P = 0, PQ, QRS, ST, T, ISO };

inline constexpr int kNumComplexes = 6;

inline constexpr int complex_index(Complex c) { return static_cast<int>(c); }

std::string_view to_string(Complex c);
Complex complex_from_string(std::string_view name);

/// Sampled single-channel ECG signal.
struct EcgRecord {
  std::string record_id;
  int sampling_rate_hz = 250;
  std::vector<double> samples;
  int source_channel = 0;  // always channel 0; kept for provenance
};

/// Annotated extent of one wave. `kind` is P, QRS or T; intervals between
/// waves (PQ, ST, ISO) are derived, never annotated. Both ends inclusive.
struct WaveBoundary {
  Complex kind = Complex::QRS;
  std::size_t onset = 0;
  std::size_t offset = 0;
};

/// One complex label per sample.
using LabelSequence = std::vector<Complex>;

/// Per-sample wavelet responses: one row per sample, one column per scale.
using FeatureMatrix = Eigen::MatrixXd;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed file content (bad grammar, bad field values).
struct FormatError : Error {
  using Error::Error;
};

// Storage format declared by a file but not handled here.
struct UnsupportedFormatError : FormatError {
  using FormatError::FormatError;
};

// Byte stream ends before the declared content does.
struct TruncationError : FormatError {
  using FormatError::FormatError;
};

// Annotation stream violates onset/label/offset pairing or ordering.
struct StructureError : Error {
  using Error::Error;
};

// Emission statistics cannot be estimated from the given labels.
struct EstimationError : Error {
  using Error::Error;
};

// Bad invocation: missing paths, unknown presets, inconsistent options.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace ecgseg

#endif  // ECGSEG_TYPES_HPP_
