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

// Reference implementations written independently of the library kernels.

#include "core/common.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace oracle {

using mgnet::Index;
using mgnet::Mat;

// expansion along the first row
inline double pfaffian(const Mat& a) {
    const Index n = a.rows();
    if (n == 0)
        return 1.0;
    if (n % 2)
        return 0.0;
    double s = 0;
    for (Index j = 1; j < n; ++j) {
        if (a(0, j) == 0)
            continue;
        std::vector<Index> rest;
        for (Index k = 1; k < n; ++k)
            if (k != j)
                rest.push_back(k);
        Mat sub(n - 2, n - 2);
        for (Index r = 0; r < n - 2; ++r)
            for (Index c = 0; c < n - 2; ++c)
                sub(r, c) = a(rest[r], rest[c]);
        s += ((j - 1) % 2 ? -1.0 : 1.0) * a(0, j) * pfaffian(sub);
    }
    return s;
}

inline Mat random_skew(Index n, std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Mat a = Mat::Zero(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            a(i, j) = u(rng);
            a(j, i) = -a(i, j);
        }
    return a;
}

// amplitude c Pf(a_x), leg 0 is the most significant bit
inline std::vector<double> amplitudes(const Mat& a, double c = 1.0) {
    const Index r = a.rows();
    std::vector<double> t(size_t(1) << r, 0.0);
    for (size_t x = 0; x < t.size(); ++x) {
        std::vector<Index> idx;
        for (Index k = 0; k < r; ++k)
            if (x >> (r - 1 - k) & 1)
                idx.push_back(k);
        if (idx.size() % 2)
            continue;
        Mat sub(idx.size(), idx.size());
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = 0; j < idx.size(); ++j)
                sub(i, j) = a(idx[i], idx[j]);
        t[x] = c * pfaffian(sub);
    }
    return t;
}

// two-mode state (1 + a f1^+ f2^+)|0>, Gamma in 0-based Majorana order
inline Mat two_mode_covariance(double a) {
    const double p = (1 - a * a) / (1 + a * a), q = 2 * a / (1 + a * a);
    Mat g = Mat::Zero(4, 4);
    g(0, 1) = -p;
    g(2, 3) = -p;
    g(0, 3) = -q;
    g(1, 2) = -q;
    return g - g.transpose();
}

} // namespace oracle
