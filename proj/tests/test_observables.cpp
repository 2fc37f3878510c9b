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
#include "core/execute.hpp"
#include "core/observables.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <complex>

using namespace mgnet;

namespace {

using cplx = std::complex<double>;

CovarianceMatrix random_state(Index L, std::mt19937_64& rng) {
    return to_covariance(oracle::random_skew(L, rng, 1.5));
}

// von Neumann entropy of the first l qubits from explicit amplitudes
double dense_entropy(const DenseTensor& psi, int l) {
    const int r = psi.rank;
    const Index da = Index(1) << l, db = Index(1) << (r - l);
    Mat m(da, db);
    double n = 0;
    for (Index a = 0; a < da; ++a)
        for (Index b = 0; b < db; ++b) {
            m(a, b) = psi(size_t(a * db + b));
            n += m(a, b) * m(a, b);
        }
    Eigen::SelfAdjointEigenSolver<Mat> es(m * m.transpose() / n);
    double s = 0;
    for (Index k = 0; k < da; ++k) {
        const double p = es.eigenvalues()(k);
        if (p > 1e-15)
            s -= p * std::log(p);
    }
    return s;
}

// <X_j X_k> on explicit amplitudes
double dense_xx(const DenseTensor& psi, int j, int k) {
    const int r = psi.rank;
    const size_t flip = (size_t(1) << (r - 1 - j)) | (size_t(1) << (r - 1 - k));
    double s = 0, n = 0;
    for (size_t x = 0; x < psi.amp.size(); ++x) {
        s += psi(x) * psi(x ^ flip);
        n += psi(x) * psi(x);
    }
    return s / n;
}

} // namespace

TEST(Correlators, Vacuum) {
    const CovarianceMatrix v = vacuum_covariance(6);
    EXPECT_DOUBLE_EQ(majorana_mean_correlation(v, 1), 0.5);
    EXPECT_EQ(fermion_correlator(v, 0, 2), 0.0);
    EXPECT_EQ(epsilon_correlator(v, 1, 3), 0.0);
    EXPECT_EQ(sigma_sigma_epsilon(v, 0, 1), 0.0);
    EXPECT_EQ(sigma_correlator(v, 0, 3), 0.0);
    EXPECT_DOUBLE_EQ(energy_density_ising(v), -0.5);
    EXPECT_THROW(fermion_correlator(v, 1, 1), Error);
    EXPECT_THROW(sigma_correlator(v, 2, 1), Error);
    EXPECT_THROW(sigma_sigma_epsilon(v, 0, 3), Error);
}

TEST(Correlators, OrderedSpinsHaveUnitSigma) {
    // Majoranas paired across sites: every X_j X_{j+1} is fixed
    const Index L = 6, N = 2 * L;
    Mat g = Mat::Zero(N, N);
    for (Index k = 0; k < L; ++k) {
        g(2 * k + 1, (2 * k + 2) % N) = 1;
        g((2 * k + 2) % N, 2 * k + 1) = -1;
    }
    const CovarianceMatrix c(g);
    for (Index d = 1; d < L; ++d)
        EXPECT_NEAR(std::abs(sigma_correlator(c, 0, d)), 1.0, 1e-15);
}

TEST(Correlators, EpsilonMatchesWickOnAmplitudes) {
    std::mt19937_64 rng(41);
    const GeneratingMatrix g{SkewMatrix(oracle::random_skew(5, rng))};
    const DenseTensor psi = from_generating(g);
    const CovarianceMatrix c = to_covariance(g);
    for (int j = 0; j < 5; ++j)
        for (int k = 0; k < 5; ++k) {
            if (j == k)
                continue;
            const cplx e4 = majorana_expectation(psi, {2 * j, 2 * j + 1, 2 * k, 2 * k + 1});
            const double connected =
                (-e4.real() - c.g(2 * j, 2 * j + 1) * c.g(2 * k, 2 * k + 1)) / 4;
            EXPECT_NEAR(epsilon_correlator(c, j, k), connected, 1e-12);
        }
}

TEST(Correlators, SigmaMatchesSpinString) {
    std::mt19937_64 rng(42);
    const GeneratingMatrix g{SkewMatrix(oracle::random_skew(6, rng))};
    const DenseTensor psi = from_generating(g);
    const CovarianceMatrix c = to_covariance(g);
    for (int j = 0; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k)
            EXPECT_NEAR(sigma_correlator(c, j, k), dense_xx(psi, j, k), 1e-12) << j << "," << k;
}

TEST(Correlators, SigmaBoundedOnNetworks) {
    const BoundaryState b = execute(build_regular(7, 0.9), Params{{"a", 0.6}});
    const Index L = b.covariance.sites();
    for (Index j = 0; j < L; j += 7)
        for (Index d = 1; d < L - j; d += 5)
            EXPECT_LE(std::abs(sigma_correlator(b.covariance, j, j + d)), 1 + 1e-9);
}

TEST(Correlators, AveragedSigmaMatchesDirect) {
    const BoundaryState b = execute(build_regular(6, 4.0), Params{{"a", 0.58}});
    const auto avg = averaged_correlator(b.covariance, "sigma", 2, 6);
    const Index L = b.covariance.sites();
    for (Index d = 2; d <= 6; ++d) {
        double s = 0;
        for (Index j = 0; j < L; ++j) {
            const auto idx = [&] {
                std::vector<Index> v;
                for (Index k = 0; k < 2 * d; ++k)
                    v.push_back((2 * j + 1 + k) % (2 * L));
                return v;
            }();
            s += std::abs(oracle::pfaffian(principal(b.covariance.g, idx)));
        }
        EXPECT_NEAR(avg[d - 2], s / double(L), 1e-10);
    }
}

TEST(Entropy, SimpleStates) {
    const CovarianceMatrix v = vacuum_covariance(4);
    EXPECT_NEAR(entanglement_entropy(v, 0, 2), 0.0, 1e-15);
    EXPECT_NEAR(entanglement_entropy_majoranas(v, 3, 1), 0.5 * std::log(2.0), 1e-15);
    // Majoranas 0-2 and 1-3 paired across sites: site 0 is maximally mixed
    Mat g = Mat::Zero(4, 4);
    g(0, 2) = 1;
    g(1, 3) = -1;
    const CovarianceMatrix c(Mat(g - g.transpose()));
    EXPECT_NEAR(entanglement_entropy(c, 0, 1), std::log(2.0), 1e-15);
}

TEST(Entropy, MatchesReducedDensityMatrix) {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 5; ++t) {
        const GeneratingMatrix g{SkewMatrix(oracle::random_skew(7, rng, 2.0))};
        const DenseTensor psi = from_generating(g);
        const CovarianceMatrix c = to_covariance(g);
        for (int l = 1; l < 7; ++l)
            EXPECT_NEAR(entanglement_entropy(c, 0, l), dense_entropy(psi, l), 1e-10);
    }
}

TEST(Entropy, ComplementAndSubadditivity) {
    std::mt19937_64 rng(44);
    const CovarianceMatrix c = random_state(20, rng);
    for (Index k = 0; k < 40; k += 3)
        for (Index w = 1; w < 40; w += 5)
            EXPECT_NEAR(entanglement_entropy_majoranas(c, k, w),
                        entanglement_entropy_majoranas(c, k + w, 40 - w), 1e-7);
    for (Index k = 0; k < 20; k += 4) {
        const double ab = entanglement_entropy(c, k, 6);
        EXPECT_LE(ab, entanglement_entropy(c, k, 3) + entanglement_entropy(c, k + 3, 3) + 1e-12);
        EXPECT_GE(ab, 0.0);
    }
}

TEST(Entropy, DimerPathAgreesWithSpectra) {
    const BoundaryState b = execute(build_happy_growth("v"), Params{});
    const CovarianceMatrix& g = b.covariance;
    ASSERT_FALSE(dimer_partners(g).empty());
    for (Index l = 1; l < 25; l += 3) {
        double s = 0;
        for (Index k = 0; k < 25; ++k)
            s += entanglement_entropy_majoranas(g, 2 * k, 2 * l);
        EXPECT_NEAR(average_entropy_profile(g, l), s / 25, 1e-9);
    }
    const auto prof = entropy_profile(g, 12);
    EXPECT_NEAR(prof[5], average_entropy_profile(g, 5), 1e-15);
}

TEST(Entropy, ChannelsAdd) {
    const BoundaryState one = execute(build_regular(8, 0.85), Params{{"a", 0.62}});
    const BoundaryState two = execute(build_regular(8, 0.85, 4), Params{{"a", 0.62}});
    const Index L1 = one.covariance.sites();
    ASSERT_EQ(two.covariance.sites(), 2 * L1);
    for (Index k = 0; k < L1; k += 5)
        for (Index m = 1; m < L1; m += 4)
            EXPECT_NEAR(entanglement_entropy(two.covariance, 2 * k, 2 * m),
                        2 * entanglement_entropy(one.covariance, k, m), 1e-8);
}

TEST(PairFrequency, VacuumAndPentagon) {
    const auto v = pair_frequency(vacuum_covariance(5));
    EXPECT_DOUBLE_EQ(v[1], 1.0);
    const CovarianceMatrix p = to_covariance(happy_pentagon());
    const auto h = pair_frequency(p);
    std::vector<double> want(6, 0.0);
    for (Index i = 0; i < 10; ++i)
        for (Index j = i + 1; j < 10; ++j)
            if (std::abs(p.g(i, j)) > 0.5)
                want[std::min(j - i, 10 - (j - i))] += 0.2;
    for (int d = 0; d <= 5; ++d)
        EXPECT_NEAR(h[d], want[d], 1e-15);
}

TEST(Fits, ExactLinesAndCardy) {
    const LinearFit f = linear_fit({1, 2, 3, 4}, {3, 5, 7, 9});
    EXPECT_NEAR(f.slope, 2, 1e-14);
    EXPECT_NEAR(f.intercept, 1, 1e-14);
    std::vector<double> x, y;
    for (int d = 1; d <= 50; ++d) {
        x.push_back(d);
        y.push_back(0.7 * std::pow(d, -1.3));
    }
    const LinearFit p = power_law_fit(x, y, 4, 20);
    EXPECT_NEAR(p.slope, -1.3, 1e-12);
    EXPECT_EQ(p.points, 17);
    const Index L = 200;
    std::vector<double> s(L / 2 + 1, 0.0);
    for (Index l = 1; l <= L / 2; ++l)
        s[l] = 0.5 / 3 * std::log(L / (3.14159265358979323846 * 1.1) *
                                  std::sin(3.14159265358979323846 * l / L));
    const CardyFit c = calabrese_cardy_fit(s, L, 2, L / 2);
    EXPECT_NEAR(c.c, 0.5, 1e-12);
    EXPECT_NEAR(c.epsilon, 1.1, 1e-12);
    EXPECT_THROW(linear_fit({1}, {1}), Error);
}

TEST(Saturation, GappedAndCritical) {
    std::vector<double> plateau(41, 0.0), growing(41, 0.0);
    for (int l = 1; l <= 40; ++l) {
        plateau[l] = 0.8 * (1 - std::exp(-l / 3.0));
        growing[l] = 0.5 / 3 * std::log(double(l));
    }
    const Saturation s = detect_saturation(plateau);
    EXPECT_TRUE(s.gapped);
    EXPECT_NEAR(correlation_length(plateau, 0.5), std::exp(3 * s.plateau / 0.5), 1e-12);
    try {
        correlation_length(growing, 0.5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotGapped);
    }
}

TEST(Report, FlatTilingReportIsComplete) {
    const BoundaryState b = execute(build_regular(6, 10.0), Params{{"a", 0.5779}});
    const ConformalReport r = fit_conformal_report(b.covariance);
    EXPECT_EQ(r.windows.dmax, b.covariance.sites() / 8);
    EXPECT_GT(r.centralCharge, 0.3);
    EXPECT_LT(r.centralCharge, 0.7);
    EXPECT_GT(r.deltaPsi, 0.3);
    const std::string text = report_to_text(r);
    for (const char* k : {"energy_density=", "central_charge=", "delta_sigma=", "c_sigma_sigma_epsilon=",
                          "fit.sse.residual="})
        EXPECT_NE(text.find(k), std::string::npos) << k;
}
