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

#include <iosfwd>

namespace mgnet {

// Gamma_jk = <(i/2)[g_j, g_k]> over 2L Majoranas, mode k owns 2k and 2k+1.
// The empty state has Gamma_{2k,2k+1} = -1.
struct CovarianceMatrix {
    Mat g;

    CovarianceMatrix() = default;
    explicit CovarianceMatrix(Mat m);

    Index majoranas() const { return g.rows(); }
    Index sites() const { return g.rows() / 2; }
    // cyclic access, no sign flip at the wrap
    double at(Index i, Index j) const {
        const Index n = g.rows();
        return g(((i % n) + n) % n, ((j % n) + n) % n);
    }
};

CovarianceMatrix vacuum_covariance(Index sites);

CovarianceMatrix to_covariance(const Mat& a);
// also hands back the normal-form lambdas
CovarianceMatrix to_covariance(const Mat& a, std::vector<double>* lambdas);
CovarianceMatrix to_covariance(const GeneratingMatrix& g);

// log of <psi|psi> for T(x) = c Pf(a_x) read as a state vector
double log_squared_norm(const GeneratingMatrix& g);

// f = Z^{-1/(2 N_T)} with log Z passed in
double normalization_factor(int tiles, double logZ);

double purity_error(const CovarianceMatrix& c);
double parity_error(const CovarianceMatrix& c);

// covariance of (|00> + |11>)/sqrt(2)
Mat epr_covariance();

// mode i becomes mode i+n; wrapped modes change sign like wrapped legs
CovarianceMatrix rotate_modes(const CovarianceMatrix& c, long n);

struct Projection {
    CovarianceMatrix rest;
    double probability;
};
// project modes i, i+1 onto (|00> + |11>)/sqrt(2)
Projection project_pair(const CovarianceMatrix& c, Index i);

void write_csv(std::ostream& os, const Mat& m);

} // namespace mgnet
