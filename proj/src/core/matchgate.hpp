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

#include "core/skew.hpp"

#include <cmath>
#include <iosfwd>
#include <string>

namespace mgnet {

// Even matchgate tensor T(x) = c Pf(a_{|x}), c = normSign * exp(logNorm).
// Leg 0 is the most significant bit of x.
struct GeneratingMatrix {
    Mat a;
    double logNorm = 0.0;
    int normSign = 1;

    GeneratingMatrix() = default;
    explicit GeneratingMatrix(const SkewMatrix& m, double logNorm = 0.0, int normSign = 1);

    Index rank() const { return a.rows(); }
    double scalar() const { return normSign * std::exp(logNorm); }
};

struct ContractionResult {
    GeneratingMatrix matrix;
    int contractedPairs = 0;
};

// last leg of u against first leg of v
GeneratingMatrix contract_pair(const GeneratingMatrix& u, const GeneratingMatrix& v);

// legs 0 and 1; throws ErrorKind::Singular when |1 + a01| < 1e-12
GeneratingMatrix self_contract(const GeneratingMatrix& t);

// Grassmann relabelling, generator i becomes generator i+n (mod r)
GeneratingMatrix cyclic_permute(const GeneratingMatrix& t, long n);

// Cyclic move of tensor legs, leg i becomes leg i+n (mod r). Differs from the
// relabelling by the parity sign picked up by the wrapped legs.
GeneratingMatrix rotate_legs(const GeneratingMatrix& t, long n);

GeneratingMatrix triangle(double a);
GeneratingMatrix triangle_general(double a12, double a13, double a23);

std::string serialize(const GeneratingMatrix& g);
GeneratingMatrix deserialize(const std::string& text);

} // namespace mgnet
