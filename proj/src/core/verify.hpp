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

#include "core/dense.hpp"
#include "core/execute.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace mgnet {

// random antisymmetric matrix with entries uniform in [-1, 1]
GeneratingMatrix random_generating(Index rank, std::mt19937_64& rng);

// Replays a layout schedule on explicit amplitudes. Throws Capacity when an
// intermediate tensor would exceed kDenseMaxRank legs.
DenseTensor execute_dense(const NetworkLayout& layout, const std::vector<GeneratingMatrix>& gens);

using SelfContractFn = std::function<GeneratingMatrix(const GeneratingMatrix&)>;
using ContractFn = std::function<GeneratingMatrix(const GeneratingMatrix&, const GeneratingMatrix&)>;

// worst entrywise gap to the dense oracle over random trials, relative to
// the largest amplitude of each result
double contract_oracle_error(const ContractFn& impl, int trials, Index maxRank,
                             std::mt19937_64& rng);
double self_contract_oracle_error(const SelfContractFn& impl, int trials, Index maxRank,
                                  std::mt19937_64& rng);

struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0;
    double tolerance = 0;
};

std::vector<CheckResult> run_verify_suite(unsigned long seed = 20260101);
std::string format_checks(const std::vector<CheckResult>& checks);

} // namespace mgnet
