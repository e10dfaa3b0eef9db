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

#include "walkdist/error.hpp"

namespace walkdist {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kEmptyVertexSet: return "EmptyVertexSet";
    case ErrorCode::kLimitExceeded: return "LimitExceeded";
    case ErrorCode::kLazinessOutOfRange: return "LazinessOutOfRange";
    case ErrorCode::kNotBipartite: return "NotBipartite";
    case ErrorCode::kUnbalancedMass: return "UnbalancedMass";
    case ErrorCode::kNotLipschitz: return "NotLipschitz";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNoLaterNeighbor: return "NoLaterNeighbor";
    case ErrorCode::kBetaOne: return "BetaOne";
    case ErrorCode::kWrongCategory: return "WrongCategory";
    case ErrorCode::kEventuallyConstant: return "EventuallyConstant";
    case ErrorCode::kTooFewPoints: return "TooFewPoints";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace walkdist
