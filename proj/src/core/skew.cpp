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

#include "core/skew.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace mgnet {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double skew_violation(const Mat& m) {
    if (m.rows() != m.cols())
        fail(ErrorKind::Validation, "skew matrix must be square");
    if (m.size() == 0)
        return 0.0;
    return (m + m.transpose()).cwiseAbs().maxCoeff();
}

void antisymmetrize(Mat& m) {
    Mat t = 0.5 * (m - m.transpose());
    m.swap(t);
}

SkewMatrix::SkewMatrix(Mat m) : m_(std::move(m)) {
    const double v = skew_violation(m_);
    if (!std::isfinite(v) || v > 1e-12)
        fail(ErrorKind::Validation,
             "matrix is not antisymmetric (violation " + fmt17(v) + ")");
    antisymmetrize(m_);
}

double pfaffian(const SkewMatrix& m) { return pfaffian_raw(m.mat()); }

double pfaffian_raw(Mat a) {
    const Index n = a.rows();
    if (n == 0)
        return 1.0;
    if (n % 2)
        return 0.0;
    double pf = 1.0;
    for (Index k = 0; k + 1 < n; k += 2) {
        // partial pivoting on column k below the diagonal
        Index kp;
        a.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&kp);
        kp += k + 1;
        if (kp != k + 1) {
            a.row(k + 1).swap(a.row(kp));
            a.col(k + 1).swap(a.col(kp));
            pf = -pf;
        }
        const double piv = a(k, k + 1);
        if (piv == 0.0)
            return 0.0;
        pf *= piv;
        const Index m = n - k - 2;
        if (m > 0) {
            Vec tau = a.row(k).tail(m).transpose() / piv;
            Vec u = a.col(k + 1).tail(m);
            a.bottomRightCorner(m, m).noalias() += tau * u.transpose() - u * tau.transpose();
        }
    }
    return pf;
}

std::vector<double> leading_pfaffians(const Mat& in) {
    const Index n = in.rows() - in.rows() % 2;
    std::vector<double> out;
    out.reserve(n / 2);
    Mat a = in.topLeftCorner(n, n);
    const double scale = std::max(1.0, n ? a.cwiseAbs().maxCoeff() : 1.0);
    double pf = 1.0;
    for (Index k = 0; k + 1 < n; k += 2) {
        const double piv = a(k, k + 1);
        if (std::abs(piv) < 1e-8 * scale) {
            for (Index kk = k; kk + 1 < n; kk += 2)
                out.push_back(pfaffian_raw(in.topLeftCorner(kk + 2, kk + 2)));
            return out;
        }
        pf *= piv;
        out.push_back(pf);
        const Index m = n - k - 2;
        if (m > 0) {
            Vec tau = a.row(k).tail(m).transpose() / piv;
            Vec u = a.col(k + 1).tail(m);
            a.bottomRightCorner(m, m).noalias() += tau * u.transpose() - u * tau.transpose();
        }
    }
    return out;
}

Mat principal(const Mat& m, const std::vector<Index>& idx) {
    const Index k = static_cast<Index>(idx.size());
    Mat out(k, k);
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j)
            out(i, j) = m(idx[i], idx[j]);
    return out;
}

SkewMatrix principal_submatrix(const SkewMatrix& m, const std::vector<bool>& mask) {
    if (static_cast<Index>(mask.size()) != m.dim())
        fail(ErrorKind::Validation, "mask length does not match matrix dimension");
    std::vector<Index> idx;
    for (Index i = 0; i < m.dim(); ++i)
        if (mask[i])
            idx.push_back(i);
    return SkewMatrix(principal(m.mat(), idx));
}

Mat NormalForm::block() const {
    const Index n = rotation.rows();
    Mat s = Mat::Zero(n, n);
    for (size_t k = 0; k < lambdas.size(); ++k) {
        s(2 * k, 2 * k + 1) = lambdas[k];
        s(2 * k + 1, 2 * k) = -lambdas[k];
    }
    return s;
}

Mat NormalForm::reconstruct() const {
    return rotation.transpose() * block() * rotation;
}

NormalForm normal_form(const SkewMatrix& m) {
    const Index n = m.dim();
    NormalForm nf;
    if (n == 0) {
        nf.rotation = Mat(0, 0);
        return nf;
    }
    Eigen::RealSchur<Mat> schur(m.mat());
    if (schur.info() != Eigen::Success)
        fail(ErrorKind::Numerical, "real Schur decomposition did not converge");
    const Mat& t = schur.matrixT();
    const Mat w = schur.matrixU().transpose();

    struct Block {
        double lambda;
        Index r0, r1;
    };
    std::vector<Block> blocks;
    std::vector<Index> singles;
    for (Index i = 0; i < n;) {
        if (i + 1 < n && t(i + 1, i) != 0.0) {
            double lam = 0.5 * (t(i, i + 1) - t(i + 1, i));
            if (lam < 0)
                blocks.push_back({-lam, i + 1, i});
            else
                blocks.push_back({lam, i, i + 1});
            i += 2;
        } else {
            singles.push_back(i);
            i += 1;
        }
    }
    // zero eigenvalues pair up into lambda = 0 blocks
    for (size_t k = 0; k + 1 < singles.size(); k += 2)
        blocks.push_back({0.0, singles[k], singles[k + 1]});
    std::stable_sort(blocks.begin(), blocks.end(),
                     [](const Block& a, const Block& b) { return a.lambda > b.lambda; });

    nf.rotation.resize(n, n);
    Index row = 0;
    for (const Block& b : blocks) {
        nf.lambdas.push_back(b.lambda);
        nf.rotation.row(row++) = w.row(b.r0);
        nf.rotation.row(row++) = w.row(b.r1);
    }
    if (singles.size() % 2) {
        nf.oddZero = true;
        nf.rotation.row(row++) = w.row(singles.back());
    }
    const double scale = std::max(1.0, m.mat().cwiseAbs().maxCoeff());
    const double res = (nf.reconstruct() - m.mat()).cwiseAbs().maxCoeff();
    if (!(res <= 1e-8 * scale))
        fail(ErrorKind::Numerical, "normal form reconstruction residual " + fmt17(res));
    return nf;
}

} // namespace mgnet
