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

#include "core/common.hpp"

#include <vector>

namespace mgnet {

// Real antisymmetric matrix. Construction absorbs drift below 1e-12 by
// antisymmetrizing and rejects anything larger.
class SkewMatrix {
public:
    SkewMatrix() = default;
    explicit SkewMatrix(Mat m);
    static SkewMatrix zero(Index dim) { return SkewMatrix(Mat::Zero(dim, dim)); }

    Index dim() const { return m_.rows(); }
    const Mat& mat() const { return m_; }
    double operator()(Index i, Index j) const { return m_(i, j); }

private:
    Mat m_;
};

// max |m + m^T|, also counts a nonzero diagonal
double skew_violation(const Mat& m);

// in-place (m - m^T)/2
void antisymmetrize(Mat& m);

double pfaffian(const SkewMatrix& m);
// unchecked kernel, takes its argument by value and destroys it
double pfaffian_raw(Mat a);

// Pf of the leading 2k x 2k blocks, k = 1..dim/2. One elimination pass
// without pivoting, with a pivoted recomputation whenever a pivot is tiny.
std::vector<double> leading_pfaffians(const Mat& a);

SkewMatrix principal_submatrix(const SkewMatrix& m, const std::vector<bool>& mask);
Mat principal(const Mat& m, const std::vector<Index>& idx);

struct NormalForm {
    Mat rotation;                 // W, orthogonal
    std::vector<double> lambdas;  // descending, >= 0
    bool oddZero = false;

    Mat block() const;            // Sigma(lambda), with the trailing zero row if odd
    Mat reconstruct() const;      // W^T Sigma W
};

NormalForm normal_form(const SkewMatrix& m);

} // namespace mgnet
