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

#include "ecgseg/signal_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

namespace ecgseg::io {
namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

long parse_long(const std::string& tok, const char* what, int line_no) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw FormatError("line " + std::to_string(line_no) + ": bad " +
                      std::string(what) + " '" + tok + "'");
  }
  return value;
}

std::vector<std::uint8_t> read_binary_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return bytes;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // binary: exact bytes, LF only
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

int sign_extend_12bit(int v) { return v >= 0x800 ? v - 0x1000 : v; }

}  // namespace

RecordHeader parse_wfdb_header(const std::string& header_text) {
  if (header_text.empty()) throw FormatError("empty header");
  std::istringstream ss(header_text);
  std::string line;
  RecordHeader header;
  int line_no = 0;
  bool have_record_line = false;
  int signals_seen = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tokens = split_ws(line);
    if (!have_record_line) {
      if (tokens.size() < 4) {
        throw FormatError("line " + std::to_string(line_no) +
                          ": expected 'name nsig fs nsamples'");
      }
      header.record_name = tokens[0];
      header.n_signals =
          static_cast<int>(parse_long(tokens[1], "signal count", line_no));
      header.sampling_rate_hz =
          static_cast<int>(parse_long(tokens[2], "sampling rate", line_no));
      long n = parse_long(tokens[3], "sample count", line_no);
      if (header.n_signals < 1 || header.sampling_rate_hz <= 0 || n < 0) {
        throw FormatError("line " + std::to_string(line_no) +
                          ": non-positive field in record line");
      }
      header.n_samples = static_cast<std::size_t>(n);
      have_record_line = true;
      continue;
    }
    if (signals_seen >= header.n_signals) break;  // trailing info lines
    if (tokens.size() < 2) {
      throw FormatError("line " + std::to_string(line_no) +
                        ": expected 'filename format ...'");
    }
    SignalSpec spec;
    spec.file_name = tokens[0];
    // The format token may carry xN/:N/+N modifiers; the leading integer is
    // the storage format.
    const std::string& fmt_tok = tokens[1];
    int fmt = 0;
    auto [ptr, ec] =
        std::from_chars(fmt_tok.data(), fmt_tok.data() + fmt_tok.size(), fmt);
    if (ec != std::errc() || ptr == fmt_tok.data()) {
      throw FormatError("line " + std::to_string(line_no) +
                        ": bad storage format '" + fmt_tok + "'");
    }
    if (fmt != 212 && fmt != 16) {
      throw UnsupportedFormatError("line " + std::to_string(line_no) +
                                   ": unsupported storage format " +
                                   std::to_string(fmt));
    }
    spec.storage_format = fmt;
    header.signals.push_back(spec);
    ++signals_seen;
  }
  if (!have_record_line) throw FormatError("header has no record line");
  if (signals_seen < header.n_signals) {
    throw FormatError("header declares " + std::to_string(header.n_signals) +
                      " signals but lists " + std::to_string(signals_seen));
  }
  return header;
}

std::vector<int> decode_format212(std::span<const std::uint8_t> bytes,
                                  std::size_t n_samples) {
  const std::size_t need = (n_samples * 3 + 1) / 2;
  if (bytes.size() < need) {
    throw TruncationError("format 212: need " + std::to_string(need) +
                          " bytes for " + std::to_string(n_samples) +
                          " samples, have " + std::to_string(bytes.size()));
  }
  std::vector<int> out;
  out.reserve(n_samples);
  std::size_t pos = 0;
  while (out.size() + 2 <= n_samples) {
    const int b0 = bytes[pos], b1 = bytes[pos + 1], b2 = bytes[pos + 2];
    out.push_back(sign_extend_12bit(((b1 & 0x0F) << 8) | b0));
    out.push_back(sign_extend_12bit(((b1 & 0xF0) << 4) | b2));
    pos += 3;
  }
  if (out.size() < n_samples) {
    const int b0 = bytes[pos], b1 = bytes[pos + 1];
    out.push_back(sign_extend_12bit(((b1 & 0x0F) << 8) | b0));
  }
  return out;
}

std::vector<int> decode_format16(std::span<const std::uint8_t> bytes,
                                 std::size_t n_samples) {
  if (bytes.size() < n_samples * 2) {
    throw TruncationError("format 16: need " + std::to_string(n_samples * 2) +
                          " bytes, have " + std::to_string(bytes.size()));
  }
  std::vector<int> out;
  out.reserve(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    int v = bytes[2 * i] | (bytes[2 * i + 1] << 8);
    if (v >= 0x8000) v -= 0x10000;
    out.push_back(v);
  }
  return out;
}

bool is_beat_code(int code) {
  // QRS-marking mnemonics of the WFDB code table: beat types 1..13 plus
  // BBB(25), LEARN(30), AESC(34), SVESC(35), PFUS(38), RONT(41).
  if (code >= 1 && code <= 13) return true;
  switch (code) {
    case 25:
    case 30:
    case 34:
    case 35:
    case 38:
    case 41:
      return true;
    default:
      return false;
  }
}

AnnotationData parse_wfdb_annotations(std::span<const std::uint8_t> bytes) {
  AnnotationData data;
  std::size_t pos = 0;
  std::size_t time = 0;
  auto read_word = [&](const char* context) -> int {
    if (pos + 2 > bytes.size()) {
      throw TruncationError(std::string("annotation stream ends inside ") +
                            context);
    }
    int w = bytes[pos] | (bytes[pos + 1] << 8);
    pos += 2;
    return w;
  };
  bool terminated = false;
  while (pos < bytes.size()) {
    const int word = read_word("a word");
    const int code = word >> 10;
    const int delta = word & 0x3FF;
    if (code == 0 && delta == 0) {
      terminated = true;
      break;
    }
    switch (code) {
      case 59: {  // SKIP: 4-byte interval, PDP-11 word order (high word first)
        const unsigned hi = static_cast<unsigned>(read_word("a SKIP offset"));
        const unsigned lo = static_cast<unsigned>(read_word("a SKIP offset"));
        time += (hi << 16) | lo;
        break;
      }
      case 60:  // NUM
      case 61:  // SUB
      case 62:  // CHN
        break;
      case 63: {  // AUX: delta = byte count, padded to even
        std::size_t skip = static_cast<std::size_t>(delta);
        skip += skip & 1;
        if (pos + skip > bytes.size()) {
          throw TruncationError("annotation stream ends inside an AUX field");
        }
        pos += skip;
        break;
      }
      default:
        time += static_cast<std::size_t>(delta);
        if (code > 49) {
          data.warnings.push_back("unknown annotation code " +
                                  std::to_string(code) + " at time " +
                                  std::to_string(time) + ", entry skipped");
          break;
        }
        data.entries.push_back({time, code});
        break;
    }
  }
  if (!terminated) {
    throw TruncationError("annotation stream has no zero terminator");
  }
  return data;
}

WaveExtraction annotations_to_waves(std::span<const AnnotationEntry> entries) {
  WaveExtraction out;
  bool open = false;
  std::size_t onset_time = 0;
  int label_code = -1;
  std::size_t last_time = 0;
  for (const auto& entry : entries) {
    if (entry.time < last_time) {
      throw StructureError("annotation times go backwards at sample " +
                           std::to_string(entry.time));
    }
    last_time = entry.time;
    if (entry.code == kCodeWaveOnset) {
      if (open) {
        throw StructureError("wave onset at sample " +
                             std::to_string(entry.time) +
                             " while a wave is still open");
      }
      open = true;
      onset_time = entry.time;
      label_code = -1;
    } else if (entry.code == kCodeWaveOffset) {
      if (!open) {
        throw StructureError("wave offset at sample " +
                             std::to_string(entry.time) + " with no onset");
      }
      if (label_code < 0) {
        throw StructureError("wave closed at sample " +
                             std::to_string(entry.time) +
                             " carries no wave label");
      }
      Complex kind;
      bool keep = true;
      if (label_code == kCodePWave) {
        kind = Complex::P;
      } else if (label_code == kCodeTWave) {
        kind = Complex::T;
      } else if (is_beat_code(label_code)) {
        kind = Complex::QRS;
      } else {
        // u waves and other non-P/QRS/T extents are dropped
        out.warnings.push_back("wave with label code " +
                               std::to_string(label_code) + " at sample " +
                               std::to_string(onset_time) + " ignored");
        kind = Complex::ISO;
        keep = false;
      }
      if (keep) {
        if (!out.waves.empty() && onset_time <= out.waves.back().offset) {
          throw StructureError("wave starting at sample " +
                               std::to_string(onset_time) +
                               " overlaps the previous wave");
        }
        out.waves.push_back({kind, onset_time, entry.time});
      }
      open = false;
      label_code = -1;
    } else {
      if (!open) {
        throw StructureError("wave label at sample " +
                             std::to_string(entry.time) +
                             " outside an onset/offset pair");
      }
      if (label_code >= 0) {
        throw StructureError("second wave label at sample " +
                             std::to_string(entry.time) +
                             " inside one onset/offset pair");
      }
      label_code = entry.code;
    }
  }
  if (open) {
    throw StructureError("wave onset at sample " + std::to_string(onset_time) +
                         " has no offset");
  }
  return out;
}

LabelSequence derive_labels(std::span<const WaveBoundary> waves,
                            std::size_t n_samples) {
  LabelSequence labels(n_samples, Complex::ISO);
  const WaveBoundary* prev = nullptr;
  for (const auto& wave : waves) {
    if (wave.onset > wave.offset) {
      throw StructureError("wave onset " + std::to_string(wave.onset) +
                           " after its offset " + std::to_string(wave.offset));
    }
    if (wave.offset >= n_samples) {
      throw StructureError("wave offset " + std::to_string(wave.offset) +
                           " beyond record length " +
                           std::to_string(n_samples));
    }
    if (prev != nullptr && wave.onset <= prev->offset) {
      throw StructureError("waves out of order at sample " +
                           std::to_string(wave.onset));
    }
    for (std::size_t i = wave.onset; i <= wave.offset; ++i) {
      labels[i] = wave.kind;
    }
    if (prev != nullptr) {
      Complex gap = Complex::ISO;
      if (prev->kind == Complex::P && wave.kind == Complex::QRS) {
        gap = Complex::PQ;
      } else if (prev->kind == Complex::QRS && wave.kind == Complex::T) {
        gap = Complex::ST;
      }
      if (gap != Complex::ISO) {
        for (std::size_t i = prev->offset + 1; i < wave.onset; ++i) {
          labels[i] = gap;
        }
      }
    }
    prev = &wave;
  }
  return labels;
}

EcgRecord read_wfdb_record(const std::filesystem::path& header_path) {
  std::ifstream in(header_path);
  if (!in) throw Error("cannot open " + header_path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const RecordHeader header = parse_wfdb_header(buffer.str());

  // Signals sharing one data file are interleaved sample by sample; read the
  // group that holds channel 0.
  const SignalSpec& first = header.signals.at(0);
  int group_size = 0;
  int channel_slot = -1;
  for (const auto& spec : header.signals) {
    if (spec.file_name == first.file_name) {
      if (spec.storage_format != first.storage_format) {
        throw UnsupportedFormatError("mixed storage formats in " +
                                     first.file_name);
      }
      if (channel_slot < 0) channel_slot = group_size;
      ++group_size;
    }
  }
  const auto data_path = header_path.parent_path() / first.file_name;
  const auto bytes = read_binary_file(data_path);
  const std::size_t total = header.n_samples * static_cast<std::size_t>(group_size);
  const std::vector<int> values = first.storage_format == 212
                                      ? decode_format212(bytes, total)
                                      : decode_format16(bytes, total);
  EcgRecord record;
  record.record_id = header.record_name;
  record.sampling_rate_hz = header.sampling_rate_hz;
  record.source_channel = 0;
  record.samples.reserve(header.n_samples);
  for (std::size_t i = 0; i < header.n_samples; ++i) {
    record.samples.push_back(
        static_cast<double>(values[i * group_size + channel_slot]));
  }
  return record;
}

LabelSequence read_wfdb_labels(const std::filesystem::path& annotation_path,
                               std::size_t n_samples,
                               std::vector<std::string>* warnings) {
  const auto bytes = read_binary_file(annotation_path);
  AnnotationData data = parse_wfdb_annotations(bytes);
  WaveExtraction extraction = annotations_to_waves(data.entries);
  if (warnings != nullptr) {
    warnings->insert(warnings->end(), data.warnings.begin(),
                     data.warnings.end());
    warnings->insert(warnings->end(), extraction.warnings.begin(),
                     extraction.warnings.end());
  }
  return derive_labels(extraction.waves, n_samples);
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw Error("double formatting failed");
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw FormatError("bad number '" + std::string(text) + "'");
  }
  return value;
}

void write_signal_csv(const std::filesystem::path& path,
                      std::span<const double> samples, bool header) {
  auto out = open_for_write(path);
  if (header) out << "index,value\n";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    out << i << ',' << format_double(samples[i]) << '\n';
  }
}

namespace {

// Splits `line` at the first comma; returns false for a header row.
bool csv_row(const std::string& line, std::string* first, std::string* rest) {
  const auto comma = line.find(',');
  if (comma == std::string::npos) return false;
  *first = line.substr(0, comma);
  *rest = line.substr(comma + 1);
  return !first->empty() && (*first)[0] >= '0' && (*first)[0] <= '9';
}

}  // namespace

std::vector<double> read_signal_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<double> samples;
  std::string line, index_tok, value_tok;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!csv_row(line, &index_tok, &value_tok)) {
      if (line_no == 1) continue;  // header row
      throw FormatError(path.string() + ":" + std::to_string(line_no) +
                        ": expected 'index,value'");
    }
    const auto index = static_cast<std::size_t>(
        parse_long(index_tok, "sample index", line_no));
    if (index != samples.size()) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) +
                        ": non-contiguous sample index");
    }
    samples.push_back(parse_double(value_tok));
  }
  return samples;
}

void write_label_csv(const std::filesystem::path& path,
                     const LabelSequence& labels, bool header) {
  auto out = open_for_write(path);
  if (header) out << "index,label\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out << i << ',' << to_string(labels[i]) << '\n';
  }
}

LabelSequence read_label_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  LabelSequence labels;
  std::string line, index_tok, label_tok;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!csv_row(line, &index_tok, &label_tok)) {
      if (line_no == 1) continue;
      throw FormatError(path.string() + ":" + std::to_string(line_no) +
                        ": expected 'index,label'");
    }
    const auto index = static_cast<std::size_t>(
        parse_long(index_tok, "sample index", line_no));
    if (index != labels.size()) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) +
                        ": non-contiguous sample index");
    }
    labels.push_back(complex_from_string(label_tok));
  }
  return labels;
}

}  // namespace ecgseg::io
