// SPDX-License-Identifier: Apache-2.0
//
// swarmsim - distributed-aperture simulator for satellite swarms
// Copyright (C) 2026 The swarmsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "swarmsim/error.hpp"

namespace swarmsim
{
    const char *to_string(ErrorKind kind)
    {
        switch (kind)
        {
        case ErrorKind::invalid_parameter:
            return "invalid-parameter";
        case ErrorKind::validation:
            return "validation";
        case ErrorKind::parse:
            return "parse";
        case ErrorKind::io:
            return "io";
        case ErrorKind::placement_infeasible:
            return "placement-infeasible";
        case ErrorKind::degenerate_pattern:
            return "degenerate-pattern";
        case ErrorKind::beam_truncated:
            return "beam-truncated";
        case ErrorKind::beam_misses_earth:
            return "beam-misses-earth";
        case ErrorKind::not_visible:
            return "not-visible";
        case ErrorKind::cost_ceiling:
            return "cost-ceiling";
        case ErrorKind::oracle_mismatch:
            return "oracle-mismatch";
        }
        return "unknown";
    }

    PlacementInfeasible::PlacementInfeasible(std::size_t accepted, std::size_t requested, std::size_t attempts)
        : Error(ErrorKind::placement_infeasible,
                "placement infeasible: accepted " + std::to_string(accepted) + " of " + std::to_string(requested) +
                    " centers after " + std::to_string(attempts) + " attempts"),
          accepted_(accepted), requested_(requested)
    {
    }
}
