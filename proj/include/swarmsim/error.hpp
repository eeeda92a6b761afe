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

#ifndef SWARMSIM_ERROR_HPP
#define SWARMSIM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swarmsim
{
    enum class ErrorKind
    {
        invalid_parameter,    // precondition violated by a caller
        validation,           // configuration field out of range
        parse,                // malformed input document
        io,                   // file could not be read or written
        placement_infeasible, // rejection sampling ran out of attempts
        degenerate_pattern,   // all-zero field cut
        beam_truncated,       // no -3 dB crossing inside the search range
        beam_misses_earth,    // ray does not intersect the sphere
        not_visible,          // ground target below the horizon of the slot
        cost_ceiling,         // brute-force evaluation too large
        oracle_mismatch       // factorized and brute-force paths disagree
    };

    const char *to_string(ErrorKind kind);

    // Single exception type for the library; the kind drives CLI exit codes.
    class Error : public std::runtime_error
    {
    public:
        Error(ErrorKind kind, const std::string &message)
            : std::runtime_error(message), kind_(kind) {}

        ErrorKind kind() const noexcept { return kind_; }

    private:
        ErrorKind kind_;
    };

    class PlacementInfeasible : public Error
    {
    public:
        PlacementInfeasible(std::size_t accepted, std::size_t requested, std::size_t attempts);

        std::size_t accepted() const noexcept { return accepted_; }
        std::size_t requested() const noexcept { return requested_; }

    private:
        std::size_t accepted_;
        std::size_t requested_;
    };

    [[noreturn]] inline void fail(ErrorKind kind, const std::string &message)
    {
        throw Error(kind, message);
    }

    inline void require(bool condition, const std::string &message)
    {
        if (!condition)
            fail(ErrorKind::invalid_parameter, message);
    }
}

#endif
