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

#ifndef ECGSEG_SIGNAL_IO_HPP_
#define ECGSEG_SIGNAL_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ecgseg/types.hpp"

namespace ecgseg::io {

// ---------------------------------------------------------------------------
// WFDB-lite readers: headers, packed signals (formats 212 and 16) and
// annotation streams. Enough of the conventions to load QT Database records;
// nothing is ever written back in these formats.
// ---------------------------------------------------------------------------

struct SignalSpec {
  std::string file_name;
  int storage_format = 212;  // 212 or 16
};

struct RecordHeader {
  std::string record_name;
  int n_signals = 0;
  int sampling_rate_hz = 0;
  std::size_t n_samples = 0;  // per signal
  std::vector<SignalSpec> signals;
};

/// Parses a header of the form "name nsig fs nsamples" followed by one
/// "filename format ..." line per signal. '#' comment lines are skipped.
/// Trailing fields on any line are ignored.
RecordHeader parse_wfdb_header(const std::string& header_text);

/// Unpacks `n_samples` signed 12-bit values from 3-byte groups:
///   first  = (low nibble of byte1) << 8 | byte0
///   second = (high nibble of byte1) << 4 | byte2
/// An odd trailing sample occupies two bytes.
std::vector<int> decode_format212(std::span<const std::uint8_t> bytes,
                                  std::size_t n_samples);

/// Little-endian signed 16-bit values.
std::vector<int> decode_format16(std::span<const std::uint8_t> bytes,
                                 std::size_t n_samples);

struct AnnotationEntry {
  std::size_t time = 0;  // absolute sample index
  int code = 0;
};

struct AnnotationData {
  std::vector<AnnotationEntry> entries;
  std::vector<std::string> warnings;
};

// Annotation codes from the published WFDB code table that the wave mapping
// relies on. Beat codes (NORMAL=1 and friends) are covered by is_beat_code().
inline constexpr int kCodeNormalBeat = 1;
inline constexpr int kCodePWave = 24;
inline constexpr int kCodeTWave = 27;
inline constexpr int kCodeUWave = 29;
inline constexpr int kCodeWaveOnset = 39;   // '('
inline constexpr int kCodeWaveOffset = 40;  // ')'

bool is_beat_code(int code);

/// Decodes the 2-byte-word MIT annotation stream: code = word >> 10,
/// time delta = word & 0x3FF. A zero word terminates. SKIP(59) consumes a
/// 4-byte interval (PDP-11 word order) added to the running time; NUM/SUB/CHN
/// and AUX pseudo-annotations are consumed without producing entries.
/// Unknown codes are skipped with a warning. Missing terminator is an error.
AnnotationData parse_wfdb_annotations(std::span<const std::uint8_t> bytes);

/// Groups (onset, wave label, offset) triples into wave extents. Labels:
/// P-wave -> P, any beat code -> QRS, T-wave -> T. Triples around other wave
/// labels (u waves) are dropped with a warning. Broken pairing or overlap is
/// a StructureError.
struct WaveExtraction {
  std::vector<WaveBoundary> waves;
  std::vector<std::string> warnings;
};
WaveExtraction annotations_to_waves(std::span<const AnnotationEntry> entries);

/// Expands wave extents into one label per sample. Samples inside a wave take
/// its label; the gap between a P offset and a QRS onset becomes PQ, between
/// QRS and T becomes ST; every other gap (including leading/trailing samples
/// and beats with no P wave) is ISO.
LabelSequence derive_labels(std::span<const WaveBoundary> waves,
                            std::size_t n_samples);

// ---------------------------------------------------------------------------
// Whole-record loading
// ---------------------------------------------------------------------------

/// Reads channel 0 of the record described by `header_path` (a .hea file).
/// Multi-signal files are de-interleaved; only formats 212 and 16 are
/// supported.
EcgRecord read_wfdb_record(const std::filesystem::path& header_path);

/// Reads a WFDB annotation file and expands it to per-sample labels.
/// Wave-mapping warnings are appended to `*warnings` when given.
LabelSequence read_wfdb_labels(const std::filesystem::path& annotation_path,
                               std::size_t n_samples,
                               std::vector<std::string>* warnings = nullptr);

// ---------------------------------------------------------------------------
// Plain-text interchange. These CSV forms are the authoritative test formats;
// writers and readers round-trip bit-exactly.
// ---------------------------------------------------------------------------

/// Signal CSV: `index,value` rows, optional `index,value` header.
void write_signal_csv(const std::filesystem::path& path,
                      std::span<const double> samples, bool header = true);
std::vector<double> read_signal_csv(const std::filesystem::path& path);

/// Label CSV: `index,label` rows over the six-symbol alphabet.
void write_label_csv(const std::filesystem::path& path,
                     const LabelSequence& labels, bool header = true);
LabelSequence read_label_csv(const std::filesystem::path& path);

/// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);
double parse_double(std::string_view text);

}  // namespace ecgseg::io

#endif  // ECGSEG_SIGNAL_IO_HPP_
