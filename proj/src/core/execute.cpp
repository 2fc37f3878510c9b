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

#include "core/execute.hpp"

#include <algorithm>
#include <cmath>

namespace mgnet {

namespace {

// Antisymmetric matrix behind a permutation and a sign per index, so cyclic
// rotations and erasures cost O(n) instead of a full copy. Logical entry
// (i, j) is sign_i sign_j s(perm_i, perm_j).
class SkewStore {
public:
    void reset(const Mat& m) {
        const Index n = m.rows();
        s_ = Mat::Zero(n + slack(n), n + slack(n));
        s_.topLeftCorner(n, n) = m;
        used_ = n;
        perm_.resize(n);
        for (Index i = 0; i < n; ++i)
            perm_[i] = i;
        sign_.assign(n, 1.0);
    }

    Index size() const { return Index(perm_.size()); }

    double at(Index i, Index j) const { return sign_[i] * sign_[j] * s_(perm_[i], perm_[j]); }

    Vec column(Index j) const {
        Vec c(size());
        for (Index i = 0; i < size(); ++i)
            c(i) = at(i, j);
        return c;
    }

    Mat materialize() const {
        const Index n = size();
        Mat m(n, n);
        for (Index j = 0; j < n; ++j)
            for (Index i = 0; i < n; ++i)
                m(i, j) = at(i, j);
        antisymmetrize(m);
        return m;
    }

    // logical i -> i + s (mod n); the s indices that wrap change sign
    void rotate(Index s) {
        const Index n = size();
        if (n == 0)
            return;
        s = ((s % n) + n) % n;
        if (s == 0)
            return;
        std::rotate(perm_.begin(), perm_.begin() + (n - s), perm_.end());
        std::rotate(sign_.begin(), sign_.begin() + (n - s), sign_.end());
        for (Index i = 0; i < s; ++i)
            sign_[i] = -sign_[i];
    }

    // append a k x k block; coupling is size() x k in logical indices
    void append(const Mat& block, const Mat* coupling) {
        const Index k = block.rows(), n = size();
        reserve(k);
        const Index base = used_;
        used_ += k;
        s_.block(base, 0, k, used_).setZero();
        s_.block(0, base, used_, k).setZero();
        s_.block(base, base, k, k) = block;
        if (coupling)
            for (Index i = 0; i < n; ++i)
                for (Index c = 0; c < k; ++c) {
                    const double v = sign_[i] * (*coupling)(i, c);
                    s_(perm_[i], base + c) = v;
                    s_(base + c, perm_[i]) = -v;
                }
        for (Index c = 0; c < k; ++c) {
            perm_.push_back(base + c);
            sign_.push_back(1.0);
        }
    }

    void erase(Index pos, Index count) {
        perm_.erase(perm_.begin() + pos, perm_.begin() + pos + count);
        sign_.erase(sign_.begin() + pos, sign_.begin() + pos + count);
    }

    // logical += u v^T, both size() x m
    void update(const Mat& u, const Mat& v) {
        const Index m = u.cols();
        Mat us = Mat::Zero(used_, m), vs = Mat::Zero(used_, m);
        for (Index i = 0; i < size(); ++i) {
            us.row(perm_[i]) = sign_[i] * u.row(i);
            vs.row(perm_[i]) = sign_[i] * v.row(i);
        }
        s_.topLeftCorner(used_, used_).noalias() += us * vs.transpose();
    }

private:
    static Index slack(Index n) { return std::max<Index>(64, n / 8); }

    void reserve(Index k) {
        if (used_ + k <= s_.rows())
            return;
        const Index n = size();
        const Index cap = n + k + slack(n + k);
        Mat fresh = Mat::Zero(cap, cap);
        for (Index j = 0; j < n; ++j)
            for (Index i = 0; i < n; ++i)
                fresh(i, j) = s_(perm_[i], perm_[j]);
        s_.swap(fresh);
        for (Index i = 0; i < n; ++i)
            perm_[i] = i;
        used_ = n;
    }

    Mat s_;
    Index used_ = 0;
    std::vector<Index> perm_;
    std::vector<double> sign_;
};

class Runner {
public:
    Runner(const NetworkLayout& lay, const std::vector<GeneratingMatrix>& gens, bool strict)
        : lay_(lay), gens_(gens), strict_(strict) {
        if (gens.size() != lay.tiles.size())
            fail(ErrorKind::Validation, "one generating matrix per tile required");
        for (size_t t = 0; t < gens.size(); ++t)
            if (gens[t].rank() != Index(lay.tiles[t].edgeLabels.size()))
                fail(ErrorKind::Validation, "generating matrix rank does not match tile " +
                                                std::to_string(t));
    }

    void run() {
        for (const Step& s : lay_.schedule) {
            switch (s.kind) {
            case Step::Kind::Start: start(gens_[s.tile]); break;
            case Step::Kind::Rotate: store_.rotate(cov_ ? 2 * s.shift : s.shift); break;
            case Step::Kind::Attach: attach(gens_[s.tile]); break;
            case Step::Kind::SelfContract: self_contract(); break;
            }
        }
    }

    GeneratingMatrix generating() const {
        GeneratingMatrix g;
        g.a = store_.materialize();
        g.logNorm = logNorm_;
        g.normSign = sign_;
        return g;
    }

    BoundaryState finish() const {
        BoundaryState b;
        b.tiles = int(lay_.tiles.size());
        b.covariancePath = cov_;
        if (cov_) {
            b.covariance.g = store_.materialize();
            b.logZ = logZ_;
        } else {
            GeneratingMatrix g = generating();
            std::vector<double> lam;
            b.covariance = to_covariance(g.a, &lam);
            b.logZ = 2 * g.logNorm;
            for (double l : lam)
                b.logZ += std::log1p(l * l);
            b.generating = std::move(g);
        }
        return b;
    }

private:
    void start(const GeneratingMatrix& g) {
        store_.reset(g.a);
        logNorm_ = g.logNorm;
        sign_ = g.normSign;
    }

    void attach(const GeneratingMatrix& t) {
        if (cov_) {
            std::vector<double> lam;
            const Mat gt = to_covariance(t.a, &lam).g;
            logZ_ += 2 * t.logNorm;
            for (double l : lam)
                logZ_ += std::log1p(l * l);
            const Index n = store_.size() / 2;
            store_.append(gt, nullptr);
            project(n - 1);
            return;
        }
        const Index n = store_.size(), k = t.rank() - 1;
        const Vec last = store_.column(n - 1);
        const Mat coupling = last * t.a.row(0).tail(k);
        store_.append(t.a.bottomRightCorner(k, k), &coupling);
        store_.erase(n - 1, 1);
        logNorm_ += t.logNorm;
        sign_ *= t.normSign;
    }

    void self_contract() {
        if (cov_) {
            project(0);
            return;
        }
        const double d = 1.0 + store_.at(0, 1);
        if (std::abs(d) < 1e-12) {
            if (strict_)
                fail(ErrorKind::Singular, "singular self-contraction, 1 + A_12 = " + fmt17(d));
            switch_to_covariance();
            project(0);
            return;
        }
        const Vec c0 = store_.column(0), c1 = store_.column(1);
        Mat u(c0.size(), 2), v(c0.size(), 2);
        u.col(0) = c0;
        u.col(1) = c1;
        v.col(0) = -c1 / d;
        v.col(1) = c0 / d;
        store_.update(u, v);
        store_.erase(0, 2);
        logNorm_ += std::log(std::abs(d));
        sign_ *= d > 0 ? 1 : -1;
    }

    void switch_to_covariance() {
        GeneratingMatrix g = generating();
        std::vector<double> lam;
        const Mat gamma = to_covariance(g.a, &lam).g;
        logZ_ = 2 * g.logNorm;
        for (double l : lam)
            logZ_ += std::log1p(l * l);
        store_.reset(gamma);
        cov_ = true;
    }

    // project modes i, i+1 onto the unnormalized |00> + |11>
    void project(Index i) {
        const Index a0 = 2 * i, N = store_.size();
        Mat gab(N, 4);
        for (Index p = 0; p < 4; ++p)
            gab.col(p) = store_.column(a0 + p);
        Mat k = gab.middleRows(a0, 4) + epr_covariance();
        const double det = k.determinant();
        const double prob = std::sqrt(std::abs(det)) / 4.0;
        if (!(prob > 1e-300))
            fail(ErrorKind::Singular, "network contracts to the zero state");
        // Gamma_BB += Gamma_AB^T K^{-1} Gamma_AB with Gamma_AB = -gab^T
        const Mat x = k.partialPivLu().solve(gab.transpose());
        store_.update(gab, x.transpose());
        store_.erase(a0, 4);
        logZ_ += std::log(2 * prob);
    }

    const NetworkLayout& lay_;
    const std::vector<GeneratingMatrix>& gens_;
    bool strict_;
    SkewStore store_;
    bool cov_ = false;
    double logNorm_ = 0, logZ_ = 0;
    int sign_ = 1;
};

} // namespace

GeneratingMatrix execute_generating(const NetworkLayout& layout,
                                    const std::vector<GeneratingMatrix>& generators) {
    Runner r(layout, generators, true);
    r.run();
    return r.generating();
}

BoundaryState execute(const NetworkLayout& layout,
                      const std::vector<GeneratingMatrix>& generators) {
    Runner r(layout, generators, false);
    r.run();
    return r.finish();
}

BoundaryState execute(const NetworkLayout& layout, const Params& params) {
    return execute(layout, tile_generators(layout, params));
}

} // namespace mgnet
