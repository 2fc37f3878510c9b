/**
 * Copyright 2026 The mgnet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "core/matchgate.hpp"

#include <complex>
#include <vector>

namespace mgnet {

// Explicit amplitudes, flat array indexed by the bitstring value with leg 0
// as the most significant bit.
struct DenseTensor {
    int rank = 0;
    std::vector<double> amp;

    DenseTensor() : amp(1, 0.0) {}
    explicit DenseTensor(int r);

    double operator()(std::size_t x) const { return amp[x]; }
    double& operator()(std::size_t x) { return amp[x]; }
    bool is_even(double tol = 0.0) const;
};

constexpr int kDenseMaxRank = 20;

DenseTensor from_generating(const GeneratingMatrix& g);
DenseTensor contract(const DenseTensor& u, const DenseTensor& v);
DenseTensor self_contract(const DenseTensor& t);
// leg i becomes leg i+n, plain qubit relabelling
DenseTensor rotate_legs(const DenseTensor& t, long n);
bool is_matchgate(const DenseTensor& t, double tol = 1e-10);

double max_abs_diff(const DenseTensor& a, const DenseTensor& b);

// Fock-space oracles. The tensor is read as a qubit state, leg k = mode k,
// gamma_{2k} = Z..Z X_k and gamma_{2k+1} = Z..Z Y_k (0-based).
std::complex<double> majorana_expectation(const DenseTensor& psi, const std::vector<int>& string);
Mat fock_covariance(const DenseTensor& psi);

} // namespace mgnet
