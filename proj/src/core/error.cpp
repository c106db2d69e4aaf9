// Copyright 2026 The narrative-net Authors
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

#include "error.hpp"

namespace narnet {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::MissingField: return "missing_field";
    case ErrorCode::InvalidEnum: return "invalid_enum";
    case ErrorCode::EmptyName: return "empty_name";
    case ErrorCode::EmptyText: return "empty_text";
    case ErrorCode::SelfLoop: return "self_loop";
    case ErrorCode::TooLong: return "too_long";
    case ErrorCode::ContentFiltered: return "content_filtered";
    case ErrorCode::Transport: return "transport";
    case ErrorCode::MalformedOutput: return "malformed_output";
    case ErrorCode::NoConvergence: return "no_convergence";
    case ErrorCode::EmptyGraph: return "empty_graph";
    case ErrorCode::NoEdges: return "no_edges";
    case ErrorCode::NoRecords: return "no_records";
    case ErrorCode::UnassignedNode: return "unassigned_node";
    case ErrorCode::SampleTooSmall: return "sample_too_small";
    case ErrorCode::ZeroVariance: return "zero_variance";
    case ErrorCode::LengthMismatch: return "length_mismatch";
    case ErrorCode::MissingMetadata: return "missing_metadata";
    case ErrorCode::TooFewDecades: return "too_few_decades";
    case ErrorCode::NoMatches: return "no_matches";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::Io: return "io";
    case ErrorCode::Parse: return "parse";
  }
  return "unknown";
}

}  // namespace narnet
