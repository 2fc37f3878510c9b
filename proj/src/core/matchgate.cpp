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

#include "core/matchgate.hpp"

#include <cmath>
#include <sstream>

namespace mgnet {

GeneratingMatrix::GeneratingMatrix(const SkewMatrix& m, double ln, int sign)
    : a(m.mat()), logNorm(ln), normSign(sign) {
    if (!std::isfinite(ln))
        fail(ErrorKind::Validation, "logNorm must be finite");
    if (sign != 1 && sign != -1)
        fail(ErrorKind::Validation, "normSign must be +1 or -1");
}

GeneratingMatrix contract_pair(const GeneratingMatrix& u, const GeneratingMatrix& v) {
    const Index du = u.rank(), dv = v.rank();
    if (du < 1 || dv < 1)
        fail(ErrorKind::Validation, "contract_pair needs operands of rank >= 1");
    const Index p = du - 1, q = dv - 1;
    GeneratingMatrix w;
    w.a.resize(p + q, p + q);
    w.a.topLeftCorner(p, p) = u.a.topLeftCorner(p, p);
    w.a.bottomRightCorner(q, q) = v.a.bottomRightCorner(q, q);
    if (p > 0 && q > 0) {
        w.a.topRightCorner(p, q).noalias() = u.a.col(p).head(p) * v.a.row(0).tail(q);
        w.a.bottomLeftCorner(q, p) = -w.a.topRightCorner(p, q).transpose();
    }
    w.logNorm = u.logNorm + v.logNorm;
    w.normSign = u.normSign * v.normSign;
    return w;
}

GeneratingMatrix self_contract(const GeneratingMatrix& t) {
    const Index r = t.rank();
    if (r < 2)
        fail(ErrorKind::Validation, "self_contract needs rank >= 2");
    const double d = 1.0 + t.a(0, 1);
    if (std::abs(d) < 1e-12)
        fail(ErrorKind::Singular, "singular self-contraction, 1 + A_12 = " + fmt17(d));
    const Index m = r - 2;
    GeneratingMatrix out;
    out.a = t.a.bottomRightCorner(m, m);
    if (m > 0) {
        Vec c0 = t.a.col(0).tail(m), c1 = t.a.col(1).tail(m);
        Vec r0 = t.a.row(0).tail(m).transpose(), r1 = t.a.row(1).tail(m).transpose();
        out.a.noalias() += (c0 * r1.transpose() - c1 * r0.transpose()) / d;
        antisymmetrize(out.a);
    }
    out.logNorm = t.logNorm + std::log(std::abs(d));
    out.normSign = t.normSign * (d > 0 ? 1 : -1);
    return out;
}

namespace {

long wrap(long n, long r) { return ((n % r) + r) % r; }

Mat cyclic(const Mat& a, long n) {
    const Index r = a.rows();
    Mat b(r, r);
    for (Index i = 0; i < r; ++i) {
        const Index si = wrap(i - n, r);
        for (Index j = 0; j < r; ++j)
            b(i, j) = a(si, wrap(j - n, r));
    }
    return b;
}

} // namespace

GeneratingMatrix cyclic_permute(const GeneratingMatrix& t, long n) {
    GeneratingMatrix out = t;
    if (t.rank() == 0)
        return out;
    out.a = cyclic(t.a, wrap(n, t.rank()));
    return out;
}

GeneratingMatrix rotate_legs(const GeneratingMatrix& t, long n) {
    GeneratingMatrix out = t;
    const long r = t.rank();
    if (r == 0)
        return out;
    n = wrap(n, r);
    if (n == 0)
        return out;
    out.a = cyclic(t.a, n);
    // the n wrapped legs now lead; moving an odd leg past the rest costs (-1)
    out.a.topRows(n) *= -1.0;
    out.a.leftCols(n) *= -1.0;
    return out;
}

GeneratingMatrix triangle(double a) { return triangle_general(a, a, a); }

GeneratingMatrix triangle_general(double a12, double a13, double a23) {
    Mat m(3, 3);
    m << 0, a12, a13, -a12, 0, a23, -a13, -a23, 0;
    return GeneratingMatrix(SkewMatrix(m));
}

std::string serialize(const GeneratingMatrix& g) {
    std::ostringstream os;
    const Index r = g.rank();
    os << r << '\n';
    for (Index i = 0; i < r; ++i)
        for (Index j = i + 1; j < r; ++j)
            os << fmt17(g.a(i, j)) << '\n';
    os << fmt17(g.logNorm) << '\n' << g.normSign << '\n';
    return os.str();
}

GeneratingMatrix deserialize(const std::string& text) {
    std::istringstream is(text);
    long r = -1;
    if (!(is >> r) || r < 0)
        fail(ErrorKind::Validation, "bad generating matrix header");
    Mat a = Mat::Zero(r, r);
    for (long i = 0; i < r; ++i)
        for (long j = i + 1; j < r; ++j) {
            double x;
            if (!(is >> x))
                fail(ErrorKind::Validation, "truncated generating matrix");
            a(i, j) = x;
            a(j, i) = -x;
        }
    double ln;
    int sign;
    if (!(is >> ln >> sign))
        fail(ErrorKind::Validation, "missing normalization");
    GeneratingMatrix g;
    g.a = std::move(a);
    g.logNorm = ln;
    g.normSign = sign;
    if (!std::isfinite(ln) || (sign != 1 && sign != -1))
        fail(ErrorKind::Validation, "bad normalization");
    return g;
}

} // namespace mgnet
