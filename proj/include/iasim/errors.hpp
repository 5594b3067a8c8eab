// SPDX-License-Identifier: Apache-2.0
//
// iasim - link-level simulator for IA-based cognitive relay networks
// Copyright (C) 2026 The iasim Authors
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

#ifndef IASIM_ERRORS_HPP
#define IASIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace iasim {

// Caller broke a documented precondition (dimension mismatch, out-of-range parameter).
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Matrix is singular or its condition estimate exceeds the singularity threshold.
class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An iterative routine failed to converge.
class NumericFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Null space requested for a matrix with full column rank.
class EmptyNullspaceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Channel draw unusable for beamformer construction; the caller redraws.
class RealizationRejected : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// More than half of all channel draws were rejected.
class ScenarioInfeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid configuration; the message carries the offending field path.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& path, const std::string& what)
        : std::runtime_error(path.empty() ? what : path + ": " + what), path_(path) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

} // namespace iasim

#endif
