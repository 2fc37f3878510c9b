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

#include "core/covariance.hpp"

#include <cmath>
#include <ostream>

namespace mgnet {

CovarianceMatrix::CovarianceMatrix(Mat m) : g(std::move(m)) {
    if (g.rows() % 2)
        fail(ErrorKind::Validation, "covariance needs an even number of Majoranas");
    const double v = skew_violation(g);
    if (!(v <= 1e-10))
        fail(ErrorKind::Validation, "covariance is not antisymmetric (" + fmt17(v) + ")");
    antisymmetrize(g);
}

CovarianceMatrix vacuum_covariance(Index sites) {
    Mat g = Mat::Zero(2 * sites, 2 * sites);
    for (Index k = 0; k < sites; ++k) {
        g(2 * k, 2 * k + 1) = -1.0;
        g(2 * k + 1, 2 * k) = 1.0;
    }
    return CovarianceMatrix(std::move(g));
}

CovarianceMatrix to_covariance(const Mat& a) { return to_covariance(a, nullptr); }

CovarianceMatrix to_covariance(const Mat& a, std::vector<double>* lambdas) {
    const Index L = a.rows();
    const NormalForm nf = normal_form(SkewMatrix(a));
    if (lambdas)
        *lambdas = nf.lambdas;

    // Only odd-even entries survive for a real A; D is that block before
    // the rotation back, Gamma_{2i, 2j+1} = (W^T D W)_{ij}.
    Mat d = Mat::Zero(L, L);
    for (size_t k = 0; k < nf.lambdas.size(); ++k) {
        const double lam = nf.lambdas[k], l2 = lam * lam;
        const double p = (1 - l2) / (1 + l2), q = 2 * lam / (1 + l2);
        const Index i = 2 * Index(k);
        d(i, i) = -p;
        d(i + 1, i + 1) = -p;
        d(i, i + 1) = -q;
        d(i + 1, i) = q;
    }
    if (nf.oddZero)
        d(L - 1, L - 1) = -1.0;
    const Mat& w = nf.rotation;
    const Mat g01 = w.transpose() * (d * w);

    Mat g = Mat::Zero(2 * L, 2 * L);
    for (Index i = 0; i < L; ++i)
        for (Index j = 0; j < L; ++j) {
            g(2 * i, 2 * j + 1) = g01(i, j);
            g(2 * j + 1, 2 * i) = -g01(i, j);
        }
    CovarianceMatrix c;
    c.g = std::move(g);
    return c;
}

CovarianceMatrix to_covariance(const GeneratingMatrix& g) { return to_covariance(g.a); }

double log_squared_norm(const GeneratingMatrix& g) {
    double s = 2 * g.logNorm;
    if (g.rank() > 0)
        for (double lam : normal_form(SkewMatrix(g.a)).lambdas)
            s += std::log1p(lam * lam);
    return s;
}

double normalization_factor(int tiles, double logZ) {
    if (tiles < 1)
        fail(ErrorKind::Validation, "normalization_factor needs at least one tile");
    return std::exp(-logZ / (2.0 * tiles));
}

double purity_error(const CovarianceMatrix& c) {
    const Index n = c.g.rows();
    if (n == 0)
        return 0.0;
    return (c.g * c.g.transpose() - Mat::Identity(n, n)).cwiseAbs().maxCoeff();
}

double parity_error(const CovarianceMatrix& c) {
    double m = 0;
    for (Index j = 0; j < c.g.rows(); ++j)
        for (Index k = j % 2; k < c.g.cols(); k += 2)
            m = std::max(m, std::abs(c.g(j, k)));
    return m;
}

Mat epr_covariance() {
    Mat m(4, 4);
    m << 0, 0, 0, -1,
         0, 0, -1, 0,
         0, 1, 0, 0,
         1, 0, 0, 0;
    return m;
}

CovarianceMatrix rotate_modes(const CovarianceMatrix& c, long n) {
    const Index N = c.g.rows(), L = N / 2;
    if (L == 0)
        return c;
    n = ((n % L) + L) % L;
    if (n == 0)
        return c;
    const Index s = 2 * n;
    Mat g(N, N);
    for (Index i = 0; i < N; ++i) {
        const Index si = (i - s + N) % N;
        for (Index j = 0; j < N; ++j)
            g(i, j) = c.g(si, (j - s + N) % N);
    }
    g.topRows(s) *= -1.0;
    g.leftCols(s) *= -1.0;
    CovarianceMatrix out;
    out.g = std::move(g);
    return out;
}

Projection project_pair(const CovarianceMatrix& c, Index i) {
    const Index N = c.g.rows();
    if (i < 0 || 2 * i + 4 > N)
        fail(ErrorKind::Validation, "project_pair index out of range");
    const Index a0 = 2 * i, nb = N - 4;
    std::vector<Index> rest;
    rest.reserve(nb);
    for (Index k = 0; k < N; ++k)
        if (k < a0 || k >= a0 + 4)
            rest.push_back(k);
    const Mat K = c.g.block(a0, a0, 4, 4) + epr_covariance();
    Mat gab(4, nb), gbb(nb, nb);
    for (Index q = 0; q < nb; ++q) {
        for (Index p = 0; p < 4; ++p)
            gab(p, q) = c.g(a0 + p, rest[q]);
        for (Index r = 0; r < nb; ++r)
            gbb(r, q) = c.g(rest[r], rest[q]);
    }
    Eigen::PartialPivLU<Mat> lu(K);
    const double det = K.determinant();
    const double prob = std::sqrt(std::abs(det)) / 4.0;
    if (prob < 1e-14)
        fail(ErrorKind::Singular, "projection onto a zero-probability pair");
    gbb.noalias() += gab.transpose() * lu.solve(gab);
    antisymmetrize(gbb);
    return {CovarianceMatrix(std::move(gbb)), prob};
}

void write_csv(std::ostream& os, const Mat& m) {
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (j)
                os << ',';
            os << fmt17(m(i, j));
        }
        os << '\n';
    }
}

} // namespace mgnet
