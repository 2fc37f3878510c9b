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

#include "core/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace mgnet {

namespace {

using cplx = std::complex<double>;

std::size_t dim_of(int r) { return std::size_t(1) << r; }

// bit of leg k in a rank-r index
inline int bit(std::size_t x, int r, int k) { return int((x >> (r - 1 - k)) & 1u); }

} // namespace

DenseTensor::DenseTensor(int r) : rank(r) {
    if (r < 0 || r > kDenseMaxRank)
        fail(ErrorKind::Capacity, "dense tensor rank " + std::to_string(r) + " out of range");
    amp.assign(dim_of(r), 0.0);
}

bool DenseTensor::is_even(double tol) const {
    for (std::size_t x = 0; x < amp.size(); ++x)
        if (std::popcount(x) % 2 && std::abs(amp[x]) > tol)
            return false;
    return true;
}

DenseTensor from_generating(const GeneratingMatrix& g) {
    const int r = int(g.rank());
    if (r > kDenseMaxRank)
        fail(ErrorKind::Capacity, "rank too large for a dense tensor");
    DenseTensor t(r);
    const double c = g.scalar();
    std::vector<Index> idx;
    for (std::size_t x = 0; x < t.amp.size(); ++x) {
        if (std::popcount(x) % 2)
            continue;
        idx.clear();
        for (int k = 0; k < r; ++k)
            if (bit(x, r, k))
                idx.push_back(k);
        t.amp[x] = c * pfaffian_raw(principal(g.a, idx));
    }
    return t;
}

DenseTensor contract(const DenseTensor& u, const DenseTensor& v) {
    if (u.rank < 1 || v.rank < 1)
        fail(ErrorKind::Validation, "dense contract needs rank >= 1");
    const int rv = v.rank - 1;
    DenseTensor w(u.rank - 1 + rv);
    const std::size_t nx = dim_of(u.rank - 1), ny = dim_of(rv);
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = 0; y < ny; ++y) {
            double s = 0;
            for (std::size_t z = 0; z < 2; ++z)
                s += u.amp[(x << 1) | z] * v.amp[(z << rv) | y];
            w.amp[(x << rv) | y] = s;
        }
    return w;
}

DenseTensor self_contract(const DenseTensor& t) {
    if (t.rank < 2)
        fail(ErrorKind::Validation, "dense self_contract needs rank >= 2");
    const int r = t.rank - 2;
    DenseTensor w(r);
    const std::size_t n = dim_of(r);
    for (std::size_t x = 0; x < n; ++x)
        w.amp[x] = t.amp[x] + t.amp[(std::size_t(3) << r) | x];
    return w;
}

DenseTensor rotate_legs(const DenseTensor& t, long n) {
    const int r = t.rank;
    DenseTensor w(r);
    if (r == 0) {
        w.amp = t.amp;
        return w;
    }
    n = ((n % r) + r) % r;
    for (std::size_t x = 0; x < t.amp.size(); ++x) {
        std::size_t y = 0;
        for (int k = 0; k < r; ++k)
            if (bit(x, r, k))
                y |= std::size_t(1) << (r - 1 - (k + n) % r);
        w.amp[y] = t.amp[x];
    }
    return w;
}

bool is_matchgate(const DenseTensor& t, double tol) {
    const int r = t.rank;
    if (r > 12)
        fail(ErrorKind::Capacity, "is_matchgate supports rank <= 12");
    const std::size_t n = t.amp.size();
    double scale = 0;
    for (double a : t.amp)
        scale = std::max(scale, std::abs(a));
    scale = std::max(scale * scale, 1e-300);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x; y < n; ++y) {
            double s = 0;
            int parity = 0;  // sum_{j<k} (x_j + y_j)
            for (int k = 0; k < r; ++k) {
                const int xk = bit(x, r, k), yk = bit(y, r, k);
                if (xk != yk) {
                    const std::size_t e = std::size_t(1) << (r - 1 - k);
                    const double term = t.amp[x ^ e] * t.amp[y ^ e];
                    s += (parity % 2) ? -term : term;
                }
                parity += xk + yk;
            }
            if (std::abs(s) > tol * scale)
                return false;
        }
    return true;
}

double max_abs_diff(const DenseTensor& a, const DenseTensor& b) {
    if (a.rank != b.rank)
        return INFINITY;
    double m = 0;
    for (std::size_t x = 0; x < a.amp.size(); ++x)
        m = std::max(m, std::abs(a.amp[x] - b.amp[x]));
    return m;
}

namespace {

// gamma_j applied to a state vector over r modes
std::vector<cplx> apply_majorana(const std::vector<cplx>& psi, int r, int j) {
    const int k = j / 2;
    const bool ytype = j % 2;
    const std::size_t e = std::size_t(1) << (r - 1 - k);
    std::vector<cplx> out(psi.size());
    for (std::size_t x = 0; x < psi.size(); ++x) {
        if (psi[x] == 0.0)
            continue;
        int before = 0;
        for (int q = 0; q < k; ++q)
            before += bit(x, r, q);
        cplx c = (before % 2) ? -1.0 : 1.0;
        if (ytype)
            c *= bit(x, r, k) ? cplx(0, -1) : cplx(0, 1);
        out[x ^ e] += c * psi[x];
    }
    return out;
}

} // namespace

std::complex<double> majorana_expectation(const DenseTensor& psi, const std::vector<int>& string) {
    const int r = psi.rank;
    std::vector<cplx> v(psi.amp.begin(), psi.amp.end());
    double norm = 0;
    for (double a : psi.amp)
        norm += a * a;
    if (norm == 0)
        fail(ErrorKind::Numerical, "zero state");
    // rightmost operator acts first
    for (auto it = string.rbegin(); it != string.rend(); ++it) {
        if (*it < 0 || *it >= 2 * r)
            fail(ErrorKind::Validation, "Majorana index out of range");
        v = apply_majorana(v, r, *it);
    }
    cplx s = 0;
    for (std::size_t x = 0; x < v.size(); ++x)
        s += psi.amp[x] * v[x];
    return s / norm;
}

Mat fock_covariance(const DenseTensor& psi) {
    const int n = 2 * psi.rank;
    Mat g = Mat::Zero(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            // (i/2)[g_j, g_k] = i g_j g_k for j != k
            const cplx e = cplx(0, 1) * majorana_expectation(psi, {j, k});
            g(j, k) = e.real();
            g(k, j) = -e.real();
        }
    return g;
}

} // namespace mgnet
