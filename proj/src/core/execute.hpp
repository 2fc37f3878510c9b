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

#include "core/covariance.hpp"
#include "core/tilings.hpp"

#include <optional>

namespace mgnet {

struct BoundaryState {
    // present when every contraction stayed on the generating-matrix path
    std::optional<GeneratingMatrix> generating;
    CovarianceMatrix covariance;
    double logZ = 0;  // log <psi|psi> of the unnormalized boundary state
    bool covariancePath = false;
    int tiles = 0;
};

// Strict generating-matrix contraction; a singular self-contraction throws.
GeneratingMatrix execute_generating(const NetworkLayout& layout,
                                    const std::vector<GeneratingMatrix>& generators);

// Follows the schedule on generating matrices and, if a contraction turns
// singular, continues from the same step on covariance matrices, where the
// pair contraction is a projection onto (|00> + |11>)/sqrt(2).
BoundaryState execute(const NetworkLayout& layout,
                      const std::vector<GeneratingMatrix>& generators);

BoundaryState execute(const NetworkLayout& layout, const Params& params);

} // namespace mgnet
