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

#include "core/covariance.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mgnet {

// Site indices are 0-based modes; site j owns Majoranas 2j and 2j+1.
// Indices past the end wrap without a sign (correlators are used through
// their magnitudes when site-averaged).

double majorana_mean_correlation(const CovarianceMatrix& g, Index d);
double fermion_correlator(const CovarianceMatrix& g, Index i, Index j);
// per Majorana: (sum_i Gamma_{i,i+1} + Gamma_{1,N}) / N
double energy_density_ising(const CovarianceMatrix& g);
// connected <eps_j eps_k>
double epsilon_correlator(const CovarianceMatrix& g, Index j, Index k);
double sigma_correlator(const CovarianceMatrix& g, Index j, Index k);
double sigma_sigma_epsilon(const CovarianceMatrix& g, Index j, Index d);

struct SubsystemSpectrum {
    std::vector<double> lambdas;  // descending, clamped to [0, 1]
    bool unpairedMajorana = false;
};

// window of Majoranas [start, start + count), cyclic
SubsystemSpectrum subsystem_spectrum(const CovarianceMatrix& g, Index start, Index count);
double entropy_of(const SubsystemSpectrum& s);
double entanglement_entropy_majoranas(const CovarianceMatrix& g, Index start, Index count);
// window of sites [k, k + l)
double entanglement_entropy(const CovarianceMatrix& g, Index k, Index l);

// Mean over all cyclic positions of the entropy of l consecutive units
// (unit = 2 Majoranas for sites). Exact dimer states take a counting path.
double average_entropy_profile(const CovarianceMatrix& g, Index l, Index unit = 2);
std::vector<double> entropy_profile(const CovarianceMatrix& g, Index lmax, Index unit = 2);

// partner index per Majorana when every row holds a single +-1, else empty
std::vector<Index> dimer_partners(const CovarianceMatrix& g, double tol = 1e-9);

// relative frequency of Majorana pairs with |Gamma| > 0.5 by chordal distance,
// index d holds n(d), d = 0 unused
std::vector<double> pair_frequency(const CovarianceMatrix& g);

struct LinearFit {
    double slope = 0, intercept = 0, residual = 0;  // residual: rms
    Index points = 0;
};
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

// log-log fit over the points with x in [lo, hi] and y > 0
LinearFit power_law_fit(const std::vector<double>& x, const std::vector<double>& y, double lo,
                        double hi);

struct CardyFit {
    double c = 0, epsilon = 0;
    LinearFit fit;
};
// S(l) = c/3 log(L/(pi eps) sin(pi l / L)) over l in [lmin, lmax]
CardyFit calabrese_cardy_fit(const std::vector<double>& profile, Index L, Index lmin, Index lmax);

struct FitWindows {
    Index dmin = 4;
    Index dmax = 0;  // 0: L/8
    Index lmin = 2;
    Index lmax = 0;  // 0: L/2
};

struct ConformalReport {
    double energyDensity = 0;
    double centralCharge = 0;
    double cutoff = 0;
    double deltaPsi = 0, deltaEpsilon = 0, deltaSigma = 0;
    double structureConstant = 0;
    double cSigma = 0, cEpsilon = 0, cPsi = 0;  // two-point normalizations
    std::map<std::string, LinearFit> diagnostics;
    FitWindows windows;
    std::vector<std::pair<std::string, std::vector<double>>> profiles;
};

// site-averaged |correlator| at distance d, averaged over all j
std::vector<double> averaged_correlator(const CovarianceMatrix& g, const std::string& which,
                                        Index dmin, Index dmax);

ConformalReport fit_conformal_report(const CovarianceMatrix& g, FitWindows w = {});
std::string report_to_text(const ConformalReport& r);

// xi = a exp(3 S_sat / c) from the saturated plateau of the site profile
struct Saturation {
    bool gapped = false;
    double plateau = 0;
    Index onset = 0;  // first l within tolerance of the plateau
};
Saturation detect_saturation(const std::vector<double>& profile, double tol = 0.02);
double correlation_length(const std::vector<double>& profile, double c, double a = 1.0);

} // namespace mgnet
