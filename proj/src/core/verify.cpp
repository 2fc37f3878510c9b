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

#include "core/verify.hpp"

#include "core/observables.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace mgnet {

GeneratingMatrix random_generating(Index rank, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Mat a = Mat::Zero(rank, rank);
    for (Index i = 0; i < rank; ++i)
        for (Index j = i + 1; j < rank; ++j) {
            a(i, j) = u(rng);
            a(j, i) = -a(i, j);
        }
    return GeneratingMatrix(SkewMatrix(std::move(a)));
}

DenseTensor execute_dense(const NetworkLayout& layout, const std::vector<GeneratingMatrix>& gens) {
    DenseTensor acc;
    for (const Step& s : layout.schedule) {
        switch (s.kind) {
        case Step::Kind::Start:
            if (gens[s.tile].rank() > kDenseMaxRank)
                fail(ErrorKind::Capacity, "tile too large for the dense replay");
            acc = from_generating(gens[s.tile]);
            break;
        case Step::Kind::Rotate:
            acc = rotate_legs(acc, s.shift);
            break;
        case Step::Kind::Attach:
            if (acc.rank + gens[s.tile].rank() - 2 > kDenseMaxRank)
                fail(ErrorKind::Capacity, "intermediate tensor too large for the dense replay");
            acc = contract(acc, from_generating(gens[s.tile]));
            break;
        case Step::Kind::SelfContract:
            acc = self_contract(acc);
            break;
        }
    }
    return acc;
}

namespace {

double relative_gap(const DenseTensor& got, const DenseTensor& want) {
    double scale = 1.0;
    for (double v : want.amp)
        scale = std::max(scale, std::abs(v));
    return max_abs_diff(got, want) / scale;
}

} // namespace

double contract_oracle_error(const ContractFn& impl, int trials, Index maxRank,
                             std::mt19937_64& rng) {
    std::uniform_int_distribution<Index> r(1, maxRank);
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
        const GeneratingMatrix u = random_generating(r(rng), rng);
        const GeneratingMatrix v = random_generating(r(rng), rng);
        const DenseTensor want = contract(from_generating(u), from_generating(v));
        const DenseTensor got = from_generating(impl(u, v));
        worst = std::max(worst, relative_gap(got, want));
    }
    return worst;
}

double self_contract_oracle_error(const SelfContractFn& impl, int trials, Index maxRank,
                                  std::mt19937_64& rng) {
    std::uniform_int_distribution<Index> r(2, maxRank);
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
        GeneratingMatrix g = random_generating(r(rng), rng);
        // stay away from the singular point 1 + a01 = 0
        while (std::abs(1 + g.a(0, 1)) < 0.05)
            g = random_generating(g.rank(), rng);
        const DenseTensor want = self_contract(from_generating(g));
        const DenseTensor got = from_generating(impl(g));
        worst = std::max(worst, relative_gap(got, want));
    }
    return worst;
}

namespace {

CheckResult check(const std::string& name, double value, double tol) {
    return {name, value <= tol, value, tol};
}

double pfaffian_identity_error(std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    double worst = 0;
    for (Index n = 2; n <= 10; n += 2) {
        const Mat a = random_generating(n, rng).a;
        const double pf = pfaffian(SkewMatrix(a));
        worst = std::max(worst, std::abs(pf * pf - a.determinant()));
        Mat b(n, n);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                b(i, j) = nd(rng);
        Mat bab = b * a * b.transpose();
        antisymmetrize(bab);
        const double lhs = pfaffian(SkewMatrix(bab)), rhs = b.determinant() * pf;
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    return worst;
}

double normal_form_error(std::mt19937_64& rng) {
    double worst = 0;
    for (Index n = 1; n <= 9; ++n) {
        const Mat a = random_generating(n, rng).a;
        const NormalForm nf = normal_form(SkewMatrix(a));
        worst = std::max(worst, (nf.reconstruct() - a).cwiseAbs().maxCoeff());
        const Mat w = nf.rotation;
        worst = std::max(worst, (w * w.transpose() - Mat::Identity(n, n)).cwiseAbs().maxCoeff());
    }
    return worst;
}

double grassmann_error(std::mt19937_64& rng) {
    // every generated amplitude table satisfies the matchgate identities
    double bad = 0;
    for (Index n = 1; n <= 8; ++n)
        if (!is_matchgate(from_generating(random_generating(n, rng))))
            bad += 1;
    return bad;
}

double covariance_oracle_error(std::mt19937_64& rng) {
    double worst = 0;
    for (Index n = 1; n <= 8; ++n) {
        const GeneratingMatrix g = random_generating(n, rng);
        const Mat want = fock_covariance(from_generating(g));
        worst = std::max(worst, (to_covariance(g).g - want).cwiseAbs().maxCoeff());
    }
    return worst;
}

double network_oracle_error(const NetworkLayout& lay, const Params& p) {
    const auto gens = tile_generators(lay, p);
    const DenseTensor want = execute_dense(lay, gens);
    const DenseTensor got = from_generating(execute_generating(lay, gens));
    return relative_gap(got, want);
}

// Two rank-4 tiles glued along two edges, with +-1 entries so that the
// second gluing is singular on the generating-matrix path.
double fallback_oracle_error(std::mt19937_64& rng) {
    NetworkLayout lay;
    lay.geometry = Geometry::Happy;
    lay.tiles.resize(2);
    lay.tiles[0].edgeLabels = {0, 1, 2, 3};
    lay.tiles[1].id = 1;
    lay.tiles[1].edgeLabels = {1, 0, 4, 5};
    for (auto& t : lay.tiles)
        t.sides = 4;
    plan_schedule(lay);
    std::bernoulli_distribution coin;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<GeneratingMatrix> gens;
        for (int t = 0; t < 2; ++t) {
            Mat a = Mat::Zero(4, 4);
            for (Index i = 0; i < 4; ++i)
                for (Index j = i + 1; j < 4; ++j) {
                    a(i, j) = coin(rng) ? 1.0 : -1.0;
                    a(j, i) = -a(i, j);
                }
            gens.emplace_back(SkewMatrix(std::move(a)));
        }
        const DenseTensor psi = execute_dense(lay, gens);
        double norm = 0;
        for (double v : psi.amp)
            norm += v * v;
        if (norm < 1e-6)
            continue;
        const BoundaryState b = execute(lay, gens);
        if (!b.covariancePath)
            continue;
        const double err = (b.covariance.g - fock_covariance(psi)).cwiseAbs().maxCoeff();
        return std::max(err, std::abs(b.logZ - std::log(norm)));
    }
    return INFINITY;
}

struct Sample {
    std::string name;
    CovarianceMatrix g;
};

std::vector<Sample> sample_networks() {
    std::vector<Sample> out;
    out.push_back({"{3,6} d_c=6", execute(build_regular(6, 6.0), Params{{"a", 0.58}}).covariance});
    out.push_back({"{3,7} r_c=0.9", execute(build_regular(7, 0.9), Params{{"a", 0.6}}).covariance});
    out.push_back({"HaPPY v", execute(build_happy_growth("v"), Params{}).covariance});
    out.push_back({"mMERA 3 layers",
                   execute(build_mmera(3), Params{{"a", 0.685}, {"b", 0.525}, {"c", 0.217}})
                       .covariance});
    return out;
}

} // namespace

std::vector<CheckResult> run_verify_suite(unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::vector<CheckResult> out;
    out.push_back(check("oracle: contract_pair rank<=6",
                        contract_oracle_error(
                            [](const GeneratingMatrix& u, const GeneratingMatrix& v) {
                                return contract_pair(u, v);
                            },
                            200, 6, rng),
                        1e-10));
    out.push_back(check("oracle: self_contract rank<=8",
                        self_contract_oracle_error(
                            [](const GeneratingMatrix& g) { return self_contract(g); }, 200, 8,
                            rng),
                        1e-10));
    {
        double worst = 0;
        for (int t = 0; t < 50; ++t) {
            const GeneratingMatrix g = random_generating(1 + t % 8, rng);
            const long s = t % 5 - 2;
            worst = std::max(worst, relative_gap(from_generating(rotate_legs(g, s)),
                                                 rotate_legs(from_generating(g), s)));
        }
        out.push_back(check("oracle: rotate_legs rank<=8", worst, 1e-12));
    }
    out.push_back(check("oracle: covariance rank<=8", covariance_oracle_error(rng), 1e-10));
    out.push_back(check("oracle: {3,6} network", network_oracle_error(build_regular(6, 2.0),
                                                                      Params{{"a", 0.58}}),
                        1e-10));
    out.push_back(check("oracle: covariance fallback", fallback_oracle_error(rng), 1e-10));
    out.push_back(check("grassmann expansion rank<=8", grassmann_error(rng), 0));
    out.push_back(check("pfaffian identities", pfaffian_identity_error(rng), 1e-10));
    out.push_back(check("normal form reconstruction", normal_form_error(rng), 1e-10));
    for (const Sample& s : sample_networks()) {
        out.push_back(check("purity " + s.name, purity_error(s.g), 1e-8));
        out.push_back(check("parity " + s.name, parity_error(s.g), 1e-9));
        const Index n = s.g.majoranas(), l = n / 3;
        const double comp = std::abs(entanglement_entropy_majoranas(s.g, 0, l) -
                                     entanglement_entropy_majoranas(s.g, l, n - l));
        out.push_back(check("entropy complement " + s.name, comp, 1e-7));
        out.push_back(check("single Majorana entropy " + s.name,
                            std::abs(entanglement_entropy_majoranas(s.g, 1, 1) - 0.5 * std::log(2.0)),
                            1e-9));
    }
    return out;
}

std::string format_checks(const std::vector<CheckResult>& checks) {
    std::ostringstream os;
    char line[256];
    for (const auto& c : checks) {
        std::snprintf(line, sizeof line, "%-4s %-40s %.3e (tol %.1e)\n", c.pass ? "PASS" : "FAIL",
                      c.name.c_str(), c.value, c.tolerance);
        os << line;
    }
    return os.str();
}

} // namespace mgnet
