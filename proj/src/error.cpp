// Copyright 2026 The tripneg Authors
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

#include "tripneg/error.hpp"

namespace tripneg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidDims: return "invalid-dims";
    case ErrorKind::kNotHermitian: return "not-hermitian";
    case ErrorKind::kNotUnitary: return "not-unitary";
    case ErrorKind::kInvalidState: return "invalid-state";
    case ErrorKind::kInvalidParams: return "invalid-params";
    case ErrorKind::kSizeCap: return "size-cap";
    case ErrorKind::kNotCalibrated: return "not-calibrated";
    case ErrorKind::kMissingData: return "missing-data";
    case ErrorKind::kIllConditioned: return "ill-conditioned";
    case ErrorKind::kInvalidSpectrum: return "invalid-spectrum";
    case ErrorKind::kInvalidComparison: return "invalid-comparison";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kInternal: return "internal";
  }
  return "unknown";
}

}  // namespace tripneg
