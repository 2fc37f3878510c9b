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

#include "core/tilings.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_map>

namespace mgnet {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Points closer than tol are the same point. Grid hashing keeps lookups O(1).
class PointPool {
public:
    explicit PointPool(double tol = 1e-8) : tol_(tol), cell_(100 * tol) {}

    int find(Point z) const {
        const long long cx = std::llround(z.real() / cell_), cy = std::llround(z.imag() / cell_);
        for (long long dx = -1; dx <= 1; ++dx)
            for (long long dy = -1; dy <= 1; ++dy) {
                auto it = grid_.find(key(cx + dx, cy + dy));
                if (it == grid_.end())
                    continue;
                for (int id : it->second)
                    if (std::abs(points_[id] - z) < tol_)
                        return id;
            }
        return -1;
    }

    // id of z, inserting when new
    int intern(Point z, bool* inserted = nullptr) {
        int id = find(z);
        if (inserted)
            *inserted = id < 0;
        if (id >= 0)
            return id;
        id = int(points_.size());
        points_.push_back(z);
        grid_[key(std::llround(z.real() / cell_), std::llround(z.imag() / cell_))].push_back(id);
        return id;
    }

    Point operator[](int id) const { return points_[id]; }

private:
    static std::uint64_t key(long long x, long long y) {
        return (std::uint64_t(x) * 0x9E3779B97F4A7C15ull) ^ std::uint64_t(y);
    }
    double tol_, cell_;
    std::vector<Point> points_;
    std::unordered_map<std::uint64_t, std::vector<int>> grid_;
};

struct RawTile {
    std::vector<Point> vertices;  // any order
    Point center;
};

// Clockwise vertex order around the centre; `disk` measures angles in
// the frame moved to the origin by a Mobius map.
std::vector<Point> clockwise(std::vector<Point> v, Point c, bool disk) {
    std::vector<std::pair<double, Point>> keyed;
    for (Point z : v)
        keyed.push_back({-std::arg(disk ? mobius(c, z) : z - c), z});
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 0; i < v.size(); ++i)
        v[i] = keyed[i].second;
    return v;
}

// Stable distance ordering, then vertex and edge interning.
void assemble(NetworkLayout& lay, std::vector<RawTile> raw, TileKind kind, bool disk) {
    std::stable_sort(raw.begin(), raw.end(), [](const RawTile& a, const RawTile& b) {
        return std::abs(a.center) < std::abs(b.center) - 1e-12;
    });
    const int n = lay.channels();
    PointPool vertices;
    std::map<std::pair<int, int>, long> edges;
    lay.tiles.clear();
    for (const RawTile& r : raw) {
        Tile t;
        t.id = int(lay.tiles.size());
        t.sides = int(r.vertices.size());
        t.center = r.center;
        t.kind = kind;
        const auto v = clockwise(r.vertices, r.center, disk);
        std::vector<int> ids;
        for (Point z : v)
            ids.push_back(vertices.intern(z));
        for (int i = 0; i < t.sides; ++i) {
            const int u = ids[i], w = ids[(i + 1) % t.sides];
            const auto key = std::minmax(u, w);
            auto it = edges.find(key);
            if (it == edges.end())
                it = edges.emplace(key, long(edges.size())).first;
            // sub-edges run in opposite directions on the two sides of an edge
            for (int j = 0; j < n; ++j) {
                const int pos = (u == key.first) ? j : n - 1 - j;
                t.edgeLabels.push_back(it->second * n + pos);
            }
        }
        lay.tiles.push_back(std::move(t));
    }
}

bool power_of_two(int chi) { return chi >= 2 && (chi & (chi - 1)) == 0; }

std::vector<RawTile> flat_triangles(double dc) {
    const Point e1(1, 0), e2(0.5, std::sqrt(3.0) / 2);
    const int N = int(std::ceil(2 * dc / std::sqrt(3.0))) + 3;
    std::vector<RawTile> out;
    for (int m = -2 * N; m <= 2 * N; ++m)
        for (int k = -2 * N; k <= 2 * N; ++k) {
            const Point v = double(m) * e1 + double(k) * e2;
            const std::vector<Point> up{v, v + e1, v + e2}, down{v + e1, v + e1 + e2, v + e2};
            for (const auto& tri : {up, down}) {
                const Point c = (tri[0] + tri[1] + tri[2]) / 3.0;
                if (std::abs(c) <= dc)
                    out.push_back({tri, c});
            }
        }
    return out;
}

std::vector<RawTile> hyperbolic_triangles(int q, double rc) {
    const double beta = 2 * kPi / q;
    const double s = std::acosh(std::cos(beta) / (1 - std::cos(beta)));
    const double rv = std::tanh(s / 2);
    const double R = std::acosh(1 / std::tan(kPi / 3) / std::tan(kPi / q));
    const double rcen = std::tanh(R / 2);
    RawTile t0{{Point(0, 0), std::polar(rv, beta), Point(rv, 0)}, std::polar(rcen, beta / 2)};
    std::vector<RawTile> out;
    if (std::abs(t0.center) > rc)
        return out;
    PointPool centers;
    centers.intern(t0.center);
    out.push_back(t0);
    std::vector<size_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<size_t> next;
        for (size_t idx : frontier) {
            for (int i = 0; i < 3; ++i) {
                const RawTile cur = out[idx];
                const Point p = cur.vertices[i], pq = cur.vertices[(i + 1) % 3],
                            r = cur.vertices[(i + 2) % 3];
                const Point nc = reflect(p, pq, cur.center);
                if (std::abs(nc) > rc)
                    continue;
                bool inserted;
                centers.intern(nc, &inserted);
                if (!inserted)
                    continue;
                out.push_back({{p, pq, reflect(p, pq, r)}, nc});
                next.push_back(out.size() - 1);
            }
        }
        frontier = std::move(next);
    }
    return out;
}

} // namespace

Point mobius(Point p, Point z) { return (z - p) / (1.0 - std::conj(p) * z); }
Point mobius_inv(Point p, Point w) { return (w + p) / (1.0 + std::conj(p) * w); }

Point reflect(Point p, Point q, Point z) {
    // move p to the origin, where the geodesic is a diameter
    const Point w = mobius(p, z);
    Point u = mobius(p, q);
    u /= std::abs(u);
    return mobius_inv(p, u * u * std::conj(w));
}

int NetworkLayout::channels() const {
    int n = 0;
    for (int c = chi; c > 1; c >>= 1)
        ++n;
    return n;
}

NetworkLayout build_regular(int q, double cutoff, int chi, Boundary bc) {
    if (q < 6)
        fail(ErrorKind::Geometry, "{3,q} tilings need q >= 6, got q = " + std::to_string(q));
    if (!power_of_two(chi))
        fail(ErrorKind::Validation, "chi must be a power of two >= 2");
    if (!(cutoff > 0) || (q > 6 && cutoff >= 1))
        fail(ErrorKind::Validation, "cutoff out of range");
    NetworkLayout lay;
    lay.geometry = Geometry::Regular;
    lay.q = q;
    lay.cutoff = cutoff;
    lay.chi = chi;
    lay.boundary = bc;
    auto raw = q == 6 ? flat_triangles(cutoff) : hyperbolic_triangles(q, cutoff);
    if (raw.size() < 2)
        fail(ErrorKind::Degenerate, "cutoff leaves fewer than two tiles");
    assemble(lay, std::move(raw), TileKind::Triangle, q > 6);
    plan_schedule(lay);
    return lay;
}

namespace {

struct PentagonRegistry {
    std::vector<RawTile> tiles;  // vertices clockwise
    PointPool centers;

    PentagonRegistry() {
        const double R = std::acosh(1 / std::tan(kPi / 5) / std::tan(kPi / 4));
        const double rv = std::tanh(R / 2);
        RawTile t0;
        for (int k = 0; k < 5; ++k)
            t0.vertices.push_back(std::polar(rv, -2 * kPi * k / 5));
        t0.center = 0;
        centers.intern(t0.center);
        tiles.push_back(t0);
    }

    // neighbour across side i
    int neighbour(int t, int i) {
        const RawTile& cur = tiles[t];
        const Point p = cur.vertices[i], q = cur.vertices[(i + 1) % 5];
        const Point nc = reflect(p, q, cur.center);
        bool inserted;
        const int id = centers.intern(nc, &inserted);
        if (inserted) {
            RawTile nt;
            nt.center = nc;
            for (auto it = cur.vertices.rbegin(); it != cur.vertices.rend(); ++it)
                nt.vertices.push_back(reflect(p, q, *it));
            tiles.push_back(std::move(nt));
        }
        return id;
    }
};

} // namespace

NetworkLayout build_happy_growth(const std::string& growth) {
    PentagonRegistry reg;
    std::set<int> region{0};
    for (char step : growth) {
        std::set<int> add;
        if (step == 'e') {
            for (int t : region)
                for (int i = 0; i < 5; ++i)
                    add.insert(reg.neighbour(t, i));
        } else if (step == 'v') {
            for (int t : region)
                for (int i = 0; i < 5; ++i) {
                    // all pentagons around vertex i of t
                    const Point v = reg.tiles[t].vertices[i];
                    std::vector<int> todo{t};
                    std::set<int> seen{t};
                    while (!todo.empty()) {
                        const int cur = todo.back();
                        todo.pop_back();
                        add.insert(cur);
                        int k = 0;
                        while (std::abs(reg.tiles[cur].vertices[k] - v) > 1e-8)
                            ++k;
                        for (int side : {k, (k + 4) % 5}) {
                            const int nb = reg.neighbour(cur, side);
                            if (seen.insert(nb).second)
                                todo.push_back(nb);
                        }
                    }
                }
        } else {
            fail(ErrorKind::Validation, std::string("unknown growth step '") + step + "'");
        }
        region.insert(add.begin(), add.end());
    }
    NetworkLayout lay;
    lay.geometry = Geometry::Happy;
    lay.growth = growth;
    lay.layers = int(growth.size()) + 1;
    lay.chi = 2;
    std::vector<RawTile> raw;
    for (int t : region)
        raw.push_back(reg.tiles[t]);
    assemble(lay, std::move(raw), TileKind::Pentagon, true);
    plan_schedule(lay);
    return lay;
}

NetworkLayout build_happy(int layers) {
    if (layers < 1)
        fail(ErrorKind::Validation, "HaPPY network needs layers >= 1");
    return build_happy_growth(std::string(layers - 1, 'e'));
}

NetworkLayout build_mmera(int layers) {
    if (layers < 1)
        fail(ErrorKind::Validation, "mMERA needs layers >= 1");
    NetworkLayout lay;
    lay.geometry = Geometry::Mmera;
    lay.layers = layers;
    lay.chi = 2;
    long next = 0;
    auto add = [&](std::vector<long> legs, TileKind kind, int layer, Point c) {
        Tile t;
        t.id = int(lay.tiles.size());
        t.sides = int(legs.size());
        t.edgeLabels = std::move(legs);
        t.kind = kind;
        t.layer = layer;
        t.center = c;
        lay.tiles.push_back(std::move(t));
    };
    std::vector<long> bnd{0, 1, 2, 3};
    next = 4;
    add(bnd, TileKind::Central, 0, 0);
    for (int l = 1; l <= layers; ++l) {
        std::vector<long> nb;
        const double n0 = double(bnd.size());
        for (size_t k = 0; k < bnd.size(); ++k) {
            const long o1 = next++, o2 = next++;
            add({bnd[k], o1, o2}, TileKind::Isometry, l,
                std::polar(l - 0.5, -2 * kPi * (k + 0.5) / n0));
            nb.push_back(o1);
            nb.push_back(o2);
        }
        bnd = nb;
        const size_t n = bnd.size();
        std::vector<long> after(n);
        for (size_t k = 0; k < n / 2; ++k) {
            const long x = bnd[2 * k + 1], y = bnd[(2 * k + 2) % n];
            const long n1 = next++, n2 = next++;
            // legs 0 and 1 face inwards
            add({y, x, n1, n2}, TileKind::Disentangler, l,
                std::polar(double(l), -2 * kPi * (2 * k + 1.5) / double(n)));
            after[2 * k + 1] = n1;
            after[(2 * k + 2) % n] = n2;
        }
        bnd = after;
    }
    plan_schedule(lay);
    return lay;
}

NetworkLayout apply_ir_cutoff(const NetworkLayout& layout, double region, Fill fill) {
    NetworkLayout out = layout;
    if (fill == Fill::None)
        return out;
    if (layout.geometry == Geometry::Mmera) {
        if (region < 0 || region > layout.layers)
            fail(ErrorKind::Validation, "IR cutoff layer count exceeds the network");
        for (Tile& t : out.tiles)
            if (t.layer < region)
                t.fill = fill;
        return out;
    }
    double extent = 0;
    for (const Tile& t : layout.tiles)
        extent = std::max(extent, std::abs(t.center));
    if (region < 0 || region > std::max(extent, layout.cutoff))
        fail(ErrorKind::Validation, "IR cutoff region exceeds the network");
    for (Tile& t : out.tiles)
        if (std::abs(t.center) <= region)
            t.fill = fill;
    return out;
}

namespace {

// position of every label in a cyclic leg list
std::unordered_map<long, std::vector<size_t>> positions(const std::vector<long>& legs) {
    std::unordered_map<long, std::vector<size_t>> pos;
    for (size_t i = 0; i < legs.size(); ++i)
        pos[legs[i]].push_back(i);
    return pos;
}

template <class T>
void rotate_left(std::vector<T>& v, size_t s) {
    std::rotate(v.begin(), v.begin() + long(s % v.size()), v.end());
}

} // namespace

void plan_schedule(NetworkLayout& lay) {
    lay.schedule.clear();
    if (lay.tiles.empty())
        fail(ErrorKind::Degenerate, "empty layout");
    std::vector<long> legs = lay.tiles[0].edgeLabels;
    lay.schedule.push_back({Step::Kind::Start, 0, 0, -1});
    std::vector<int> remaining(lay.tiles.size() - 1);
    std::iota(remaining.begin(), remaining.end(), 1);

    while (!remaining.empty()) {
        const auto pos = positions(legs);
        const long n = long(legs.size());
        size_t chosen = remaining.size();
        long st = 0, m = 0;
        for (size_t c = 0; c < remaining.size() && chosen == remaining.size(); ++c) {
            const auto& E = lay.tiles[remaining[c]].edgeLabels;
            const long r = long(E.size());
            std::vector<char> sh(r);
            for (long i = 0; i < r; ++i)
                sh[i] = pos.count(E[i]) > 0;
            long runs = 0, start = -1, cnt = 0;
            for (long i = 0; i < r; ++i) {
                cnt += sh[i];
                if (sh[i] && !sh[(i + r - 1) % r]) {
                    ++runs;
                    start = i;
                }
            }
            if (runs != 1)
                continue;
            // the shared run must sit in the accumulator in reverse order
            bool ok = true;
            for (long k = 0; k + 1 < cnt && ok; ++k) {
                const auto& pa = pos.at(E[(start + k) % r]);
                const auto& pb = pos.at(E[(start + k + 1) % r]);
                ok = pa.size() == 1 && pb.size() == 1 && long(pb[0]) == (long(pa[0]) + n - 1) % n;
            }
            if (!ok)
                continue;
            chosen = c;
            st = start;
            m = cnt;
        }
        if (chosen == remaining.size())
            fail(ErrorKind::Geometry, "no tile can be attached without crossing");
        const int tid = remaining[chosen];
        remaining.erase(remaining.begin() + long(chosen));
        std::vector<long> Et = lay.tiles[tid].edgeLabels;
        rotate_left(Et, size_t(st));

        const long p = long(pos.at(Et[0])[0]);
        const long shift = (n - 1 - p) % n;
        if (shift)
            lay.schedule.push_back({Step::Kind::Rotate, -1, shift, -1});
        rotate_left(legs, size_t(p + 1));
        lay.schedule.push_back({Step::Kind::Attach, tid, st, Et[0]});
        legs.pop_back();
        legs.insert(legs.end(), Et.begin() + 1, Et.end());

        for (long k = 1; k < m; ++k) {
            const long e = Et[k];
            std::vector<size_t> at;
            for (size_t i = 0; i < legs.size(); ++i)
                if (legs[i] == e)
                    at.push_back(i);
            if (at.size() != 2)
                fail(ErrorKind::Geometry, "edge label is not shared by exactly two legs");
            size_t s;
            if (at[1] == at[0] + 1)
                s = at[0];
            else if (at[0] == 0 && at[1] == legs.size() - 1)
                s = at[1];
            else
                fail(ErrorKind::Geometry, "self-contraction legs are not adjacent");
            if (s)
                lay.schedule.push_back({Step::Kind::Rotate, -1, -long(s), -1});
            rotate_left(legs, s);
            lay.schedule.push_back({Step::Kind::SelfContract, -1, 0, e});
            legs.erase(legs.begin(), legs.begin() + 2);
        }
    }
    lay.boundaryEdges = legs;
}

std::vector<long> simulate_schedule(const NetworkLayout& lay) {
    std::vector<long> legs;
    for (const Step& s : lay.schedule) {
        switch (s.kind) {
        case Step::Kind::Start:
            legs = lay.tiles.at(s.tile).edgeLabels;
            break;
        case Step::Kind::Rotate: {
            const long n = long(legs.size());
            rotate_left(legs, size_t(((-s.shift) % n + n) % n));
            break;
        }
        case Step::Kind::Attach: {
            std::vector<long> Et = lay.tiles.at(s.tile).edgeLabels;
            rotate_left(Et, size_t(s.shift));
            if (legs.empty() || legs.back() != Et[0] || Et[0] != s.edge)
                fail(ErrorKind::Geometry, "attach step does not match the open legs");
            legs.pop_back();
            legs.insert(legs.end(), Et.begin() + 1, Et.end());
            break;
        }
        case Step::Kind::SelfContract:
            if (legs.size() < 2 || legs[0] != legs[1] || legs[0] != s.edge)
                fail(ErrorKind::Geometry, "self-contraction step does not match the open legs");
            legs.erase(legs.begin(), legs.begin() + 2);
            break;
        }
    }
    return legs;
}

double mmera_a0() { return std::sqrt(1 + 1 / std::sqrt(2.0)) - 1; }
double mmera_b0() { return 0.23463313; }

GeneratingMatrix happy_pentagon() {
    Mat a(5, 5);
    a << 0, -1, 1, 1, -1,
         1, 0, -1, 1, 1,
         -1, 1, 0, -1, 1,
         -1, -1, 1, 0, -1,
         1, -1, -1, 1, 0;
    return GeneratingMatrix(SkewMatrix(a), std::log(0.25), 1);
}

GeneratingMatrix mmera_central(double a0, double b0) {
    Mat a(4, 4);
    a << 0, a0, b0, a0,
         -a0, 0, a0, b0,
         -b0, -a0, 0, a0,
         -a0, -b0, -a0, 0;
    return GeneratingMatrix(SkewMatrix(a));
}

GeneratingMatrix mmera_isometry(double a, double b) { return triangle_general(a, a, b); }

GeneratingMatrix mmera_disentangler(double c, double d, double e, double f) {
    Mat a(4, 4);
    a << 0, c, e, f,
         -c, 0, d, e,
         -e, -d, 0, c,
         -f, -e, -c, 0;
    return GeneratingMatrix(SkewMatrix(a));
}

std::vector<std::string> parameter_names(const NetworkLayout& lay) {
    switch (lay.geometry) {
    case Geometry::Regular:
        return {"a", "a12", "a13", "a23"};
    case Geometry::Mmera:
        return {"a", "b", "c", "d", "e", "f", "a0", "b0"};
    case Geometry::Happy:
        return {};
    }
    return {};
}

namespace {

double need(const Params& p, const std::string& k) {
    auto it = p.find(k);
    if (it == p.end())
        fail(ErrorKind::Validation, "missing parameter '" + k + "'");
    return it->second;
}

double get_or(const Params& p, const std::string& k, double dflt) {
    auto it = p.find(k);
    return it == p.end() ? dflt : it->second;
}

// Locally periodic pattern: entries further apart than half the legs flip.
void make_periodic(Mat& a, int channels) {
    const Index r = a.rows();
    const Index sides = r / channels;
    for (Index i = 0; i < r; ++i)
        for (Index j = i + 1; j < r; ++j)
            if (2 * (j / channels - i / channels) >= sides) {
                a(i, j) = -a(i, j);
                a(j, i) = -a(j, i);
            }
}

} // namespace

std::vector<GeneratingMatrix> tile_generators(const NetworkLayout& lay, const Params& params) {
    const auto names = parameter_names(lay);
    for (const auto& kv : params)
        if (std::find(names.begin(), names.end(), kv.first) == names.end())
            fail(ErrorKind::Validation, "unknown parameter '" + kv.first + "' for this geometry");

    GeneratingMatrix base, central, iso, dis;
    const int n = lay.channels();
    if (lay.geometry == Geometry::Regular) {
        double a12, a13, a23;
        if (params.count("a")) {
            a12 = a13 = a23 = params.at("a");
        } else {
            a12 = need(params, "a12");
            a13 = need(params, "a13");
            a23 = need(params, "a23");
        }
        // one independent triangle per channel, legs j, n+j, 2n+j
        Mat a = Mat::Zero(3 * n, 3 * n);
        for (int j = 0; j < n; ++j) {
            a(j, n + j) = a12;
            a(j, 2 * n + j) = a13;
            a(n + j, 2 * n + j) = a23;
        }
        base.a = a - a.transpose();
    } else if (lay.geometry == Geometry::Happy) {
        base = happy_pentagon();
    } else {
        const double a = need(params, "a"), b = need(params, "b"), c = need(params, "c");
        central = mmera_central(get_or(params, "a0", mmera_a0()), get_or(params, "b0", mmera_b0()));
        iso = mmera_isometry(a, b);
        dis = mmera_disentangler(c, get_or(params, "d", a), get_or(params, "e", c), get_or(params, "f", a));
    }

    std::vector<GeneratingMatrix> out;
    out.reserve(lay.tiles.size());
    for (const Tile& t : lay.tiles) {
        GeneratingMatrix g;
        switch (t.kind) {
        case TileKind::Central: g = central; break;
        case TileKind::Isometry: g = iso; break;
        case TileKind::Disentangler: g = dis; break;
        default: g = base; break;
        }
        if (t.fill != Fill::None) {
            const Index r = Index(t.edgeLabels.size());
            Mat a = Mat::Zero(r, r);
            if (t.fill == Fill::One)
                a.triangularView<Eigen::StrictlyUpper>().setOnes();
            g.a = a - a.transpose();
            g.logNorm = 0;
            g.normSign = 1;
        } else if (lay.boundary == Boundary::Periodic && t.id != lay.schedule.front().tile) {
            make_periodic(g.a, n);
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::string layout_to_json(const NetworkLayout& lay) {
    using nlohmann::json;
    static const char* geo[] = {"regular", "happy", "mmera"};
    static const char* kinds[] = {"triangle", "pentagon", "central", "isometry", "disentangler"};
    static const char* fills[] = {"none", "zero", "one"};
    static const char* steps[] = {"start", "rotate", "attach", "self_contract"};
    json j;
    j["geometry"] = geo[int(lay.geometry)];
    j["q"] = lay.q;
    j["cutoff"] = lay.cutoff;
    j["chi"] = lay.chi;
    j["layers"] = lay.layers;
    j["growth"] = lay.growth;
    j["boundary_condition"] = lay.boundary == Boundary::Antiperiodic ? "antiperiodic" : "periodic";
    j["tiles"] = json::array();
    for (const Tile& t : lay.tiles)
        j["tiles"].push_back({{"id", t.id},
                              {"sides", t.sides},
                              {"center", {t.center.real(), t.center.imag()}},
                              {"edges", t.edgeLabels},
                              {"kind", kinds[int(t.kind)]},
                              {"fill", fills[int(t.fill)]},
                              {"layer", t.layer}});
    j["schedule"] = json::array();
    for (const Step& s : lay.schedule)
        j["schedule"].push_back(
            {{"op", steps[int(s.kind)]}, {"tile", s.tile}, {"shift", s.shift}, {"edge", s.edge}});
    j["boundary_edges"] = lay.boundaryEdges;
    return j.dump(1);
}

} // namespace mgnet
