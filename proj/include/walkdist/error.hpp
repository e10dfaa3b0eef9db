// Copyright 2026 The walkdist Authors
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

#ifndef WALKDIST_ERROR_HPP_
#define WALKDIST_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace walkdist {

enum class ErrorCode {
  kInvalidArgument,
  kSelfLoop,
  kDuplicateEdge,
  kDisconnected,
  kEmptyVertexSet,
  kLimitExceeded,
  kLazinessOutOfRange,
  kNotBipartite,
  kUnbalancedMass,
  kNotLipschitz,
  kTooLarge,
  kNoLaterNeighbor,
  kBetaOne,
  kWrongCategory,
  kEventuallyConstant,
  kTooFewPoints,
  kParse,
  kIo,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace walkdist

#endif  // WALKDIST_ERROR_HPP_
