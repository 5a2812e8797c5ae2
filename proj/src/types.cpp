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

#include "ecgseg/types.hpp"

namespace ecgseg {

std::string_view to_string(Complex c) {
  switch (c) {
    case Complex::P:
      return "P";
    case Complex::PQ:
      return "PQ";
    case Complex::QRS:
      return "QRS";
    case Complex::ST:
      return "ST";
    case Complex::T:
      return "T";
    case Complex::ISO:
      return "ISO";
  }
  throw Error("invalid Complex value");
}

Complex complex_from_string(std::string_view name) {
  if (name == "P") return Complex::P;
  if (name == "PQ") return Complex::PQ;
  if (name == "QRS") return Complex::QRS;
  if (name == "ST") return Complex::ST;
  if (name == "T") return Complex::T;
  if (name == "ISO") return Complex::ISO;
  throw FormatError("unknown complex label '" + std::string(name) + "'");
}

}  // namespace ecgseg
