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

#ifndef IASIM_RNG_HPP
#define IASIM_RNG_HPP

#include "iasim/matrix.hpp"

#include <cstdint>
#include <random>

namespace iasim {

/// Seeded random stream. Streams for different (seed, index) pairs are independent, so a
/// Monte Carlo trial draws the same numbers no matter which worker runs it.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// Stream for one Monte Carlo trial, derived by counter mixing from the run seed.
    static RandomStream for_trial(std::uint64_t seed, std::uint64_t index);

    double normal() { return normal_(engine_); }
    double uniform() { return uniform_(engine_); }
    std::uint64_t bits() { return engine_(); }

    /// CN(0, variance) sample.
    cplx complex_normal(double variance = 1.0);

    /// rows x cols matrix of i.i.d. CN(0, 1) entries.
    ComplexMatrix complex_normal_matrix(std::size_t rows, std::size_t cols);

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

} // namespace iasim

#endif
