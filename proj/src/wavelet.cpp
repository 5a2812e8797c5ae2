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

#include "ecgseg/wavelet.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "ecgseg/signal_io.hpp"

namespace ecgseg::wavelet {

WaveletKernel mexican_hat_kernel(int scale_exponent) {
  if (scale_exponent < 1) {
    throw std::invalid_argument("scale exponent must be >= 1, got " +
                                std::to_string(scale_exponent));
  }
  const double scale = std::exp2(scale_exponent);
  const double norm = (1.0 / std::sqrt(scale)) * 2.0 /
                      (std::sqrt(3.0) * std::pow(std::numbers::pi, 0.25));
  WaveletKernel kernel;
  kernel.scale_exponent = scale_exponent;
  kernel.half_width = kSupportScaleUnits * static_cast<int>(scale);
  kernel.taps.resize(2 * static_cast<std::size_t>(kernel.half_width) + 1);
  for (int n = -kernel.half_width; n <= kernel.half_width; ++n) {
    const double t = static_cast<double>(std::abs(n)) / scale;  // even in n
    kernel.taps[static_cast<std::size_t>(kernel.half_width + n)] =
        norm * (1.0 - t * t) * std::exp(-0.5 * t * t);
  }
  return kernel;
}

FeatureMatrix cwt(std::span<const double> signal,
                  std::span<const int> scale_exponents) {
  if (signal.empty()) throw std::invalid_argument("cwt: empty signal");
  if (scale_exponents.empty()) {
    throw std::invalid_argument("cwt: no scale exponents");
  }
  const auto n = static_cast<Eigen::Index>(signal.size());
  FeatureMatrix out(n, static_cast<Eigen::Index>(scale_exponents.size()));
  for (std::size_t col = 0; col < scale_exponents.size(); ++col) {
    const WaveletKernel kernel = mexican_hat_kernel(scale_exponents[col]);
    const int h = kernel.half_width;
    for (Eigen::Index i = 0; i < n; ++i) {
      const int lo = std::max(-h, static_cast<int>(-i));
      const int hi = std::min(h, static_cast<int>(n - 1 - i));
      double acc = 0.0;
      for (int k = lo; k <= hi; ++k) {
        acc += signal[static_cast<std::size_t>(i + k)] * kernel.tap(k);
      }
      out(i, static_cast<Eigen::Index>(col)) = acc;
    }
  }
  return out;
}

void zscore_columns(FeatureMatrix& features) {
  for (Eigen::Index c = 0; c < features.cols(); ++c) {
    auto col = features.col(c);
    const double mean = col.mean();
    col.array() -= mean;
    const double var = col.squaredNorm() / static_cast<double>(col.size());
    if (var > 0.0) col /= std::sqrt(var);
  }
}

void write_feature_csv(const std::filesystem::path& path,
                       const FeatureMatrix& features,
                       std::span<const int> scale_exponents,
                       bool header) {
  if (static_cast<std::size_t>(features.cols()) != scale_exponents.size()) {
    throw std::invalid_argument("feature columns do not match scale list");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  if (header) {
    out << "index";
    for (int j : scale_exponents) out << ",w" << (1 << j);
    out << '\n';
  }
  for (Eigen::Index i = 0; i < features.rows(); ++i) {
    out << i;
    for (Eigen::Index c = 0; c < features.cols(); ++c) {
      out << ',' << io::format_double(features(i, c));
    }
    out << '\n';
  }
}

FeatureFile read_feature_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  FeatureFile file;
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  std::size_t n_cols = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() < 2) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) +
                        ": expected 'index,w...'");
    }
    if (line_no == 1 && fields[0] == "index") {
      for (std::size_t c = 1; c < fields.size(); ++c) {
        if (fields[c].size() < 2 || fields[c][0] != 'w') {
          throw FormatError(path.string() + ": bad feature column name '" +
                            fields[c] + "'");
        }
        const int scale = static_cast<int>(
            io::parse_double(std::string_view(fields[c]).substr(1)));
        int j = 0;
        while ((1 << j) < scale) ++j;
        if ((1 << j) != scale) {
          throw FormatError(path.string() + ": column scale " +
                            std::to_string(scale) + " is not a power of two");
        }
        file.scale_exponents.push_back(j);
      }
      n_cols = fields.size() - 1;
      continue;
    }
    if (n_cols == 0) n_cols = fields.size() - 1;
    if (fields.size() - 1 != n_cols) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) +
                        ": inconsistent column count");
    }
    std::vector<double> row;
    row.reserve(n_cols);
    for (std::size_t c = 1; c < fields.size(); ++c) {
      row.push_back(io::parse_double(fields[c]));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw FormatError(path.string() + ": no feature rows");
  file.features.resize(static_cast<Eigen::Index>(rows.size()),
                       static_cast<Eigen::Index>(n_cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < n_cols; ++c) {
      file.features(static_cast<Eigen::Index>(i),
                    static_cast<Eigen::Index>(c)) = rows[i][c];
    }
  }
  return file;
}

}  // namespace ecgseg::wavelet
