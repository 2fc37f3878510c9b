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

#include "core/observables.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace mgnet {

namespace {

constexpr double kPi = 3.14159265358979323846;

Index wrap(Index i, Index n) { return ((i % n) + n) % n; }

std::vector<Index> cyclic_range(Index start, Index count, Index n) {
    std::vector<Index> idx(count);
    for (Index k = 0; k < count; ++k)
        idx[k] = wrap(start + k, n);
    return idx;
}

double binary_entropy(double p) {
    double s = 0;
    if (p > 0)
        s -= p * std::log(p);
    if (p < 1)
        s -= (1 - p) * std::log1p(-p);
    return s;
}

} // namespace

double majorana_mean_correlation(const CovarianceMatrix& g, Index d) {
    const Index n = g.majoranas();
    if (d < 1 || d >= n)
        fail(ErrorKind::Validation, "distance out of range");
    double s = 0;
    for (Index k = 0; k < n; ++k)
        s += std::abs(g.at(k, k + d));
    return s / double(n);
}

double fermion_correlator(const CovarianceMatrix& g, Index i, Index j) {
    if (i == j)
        fail(ErrorKind::Validation, "fermion_correlator needs distinct sites");
    return 0.25 * (g.at(2 * i + 1, 2 * j) + g.at(2 * i, 2 * j + 1));
}

double energy_density_ising(const CovarianceMatrix& g) {
    const Index n = g.majoranas();
    if (n < 2)
        fail(ErrorKind::Validation, "energy needs at least one site");
    double s = g.g(0, n - 1);
    for (Index i = 0; i + 1 < n; ++i)
        s += g.g(i, i + 1);
    return s / double(n);
}

double epsilon_correlator(const CovarianceMatrix& g, Index j, Index k) {
    if (j == k)
        fail(ErrorKind::Validation, "epsilon_correlator needs distinct sites");
    return 0.25 * g.at(2 * j, 2 * k + 1) * g.at(2 * j + 1, 2 * k);
}

double sigma_correlator(const CovarianceMatrix& g, Index j, Index k) {
    if (!(j < k))
        fail(ErrorKind::Validation, "sigma_correlator needs j < k");
    const auto idx = cyclic_range(2 * j + 1, 2 * (k - j), g.majoranas());
    const double pf = pfaffian_raw(principal(g.g, idx));
    return ((k - j) % 2 ? -1.0 : 1.0) * pf;
}

double sigma_sigma_epsilon(const CovarianceMatrix& g, Index j, Index d) {
    const Index n = g.majoranas();
    if (d < 1 || 2 * (2 * d + 1) > n)
        fail(ErrorKind::Validation, "sigma_sigma_epsilon windows overlap");
    const Index l = j + 2 * d;
    auto idx = cyclic_range(2 * j + 1, 2 * d, n);
    const double pf = pfaffian_raw(principal(g.g, idx));
    idx.push_back(wrap(2 * l, n));
    idx.push_back(wrap(2 * l + 1, n));
    const double pf2 = pfaffian_raw(principal(g.g, idx));
    return (d % 2 ? -0.5 : 0.5) * (pf2 - pf * g.at(2 * l, 2 * l + 1));
}

SubsystemSpectrum subsystem_spectrum(const CovarianceMatrix& g, Index start, Index count) {
    SubsystemSpectrum s;
    if (count <= 0)
        return s;
    const Mat a = principal(g.g, cyclic_range(start, count, g.majoranas()));
    // Even parity states only couple even to odd Majoranas, so a window of
    // whole sites reduces to the singular values of that l x l block.
    if (start % 2 == 0 && count % 2 == 0) {
        const Index l = count / 2;
        Mat b(l, l);
        double same = 0;
        for (Index i = 0; i < l; ++i)
            for (Index j = 0; j < l; ++j) {
                b(i, j) = a(2 * i, 2 * j + 1);
                same = std::max({same, std::abs(a(2 * i, 2 * j)), std::abs(a(2 * i + 1, 2 * j + 1))});
            }
        if (same < 1e-13) {
            Eigen::SelfAdjointEigenSolver<Mat> es(b.transpose() * b, Eigen::EigenvaluesOnly);
            for (Index k = l - 1; k >= 0; --k)
                s.lambdas.push_back(std::sqrt(std::clamp(es.eigenvalues()(k), 0.0, 1.0)));
            return s;
        }
    }
    // Gamma_A^T Gamma_A carries every symplectic eigenvalue squared, twice
    const Mat m = a.transpose() * a;
    Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + count);
    std::sort(ev.rbegin(), ev.rend());
    for (Index k = 0; k + 1 < count; k += 2) {
        const double v = 0.5 * (ev[k] + ev[k + 1]);
        s.lambdas.push_back(std::sqrt(std::clamp(v, 0.0, 1.0)));
    }
    s.unpairedMajorana = count % 2;
    return s;
}

double entropy_of(const SubsystemSpectrum& s) {
    double e = 0;
    for (double l : s.lambdas)
        e += binary_entropy(0.5 * (1 + l));
    if (s.unpairedMajorana)
        e += 0.5 * std::log(2.0);
    return e;
}

double entanglement_entropy_majoranas(const CovarianceMatrix& g, Index start, Index count) {
    return entropy_of(subsystem_spectrum(g, start, count));
}

double entanglement_entropy(const CovarianceMatrix& g, Index k, Index l) {
    if (l < 1 || l >= g.sites())
        fail(ErrorKind::Validation, "window length out of range");
    return entanglement_entropy_majoranas(g, 2 * k, 2 * l);
}

std::vector<Index> dimer_partners(const CovarianceMatrix& g, double tol) {
    const Index n = g.majoranas();
    std::vector<Index> partner(n);
    for (Index i = 0; i < n; ++i) {
        Index j;
        const double m = g.g.row(i).cwiseAbs().maxCoeff(&j);
        if (std::abs(m - 1) > tol)
            return {};
        partner[i] = j;
    }
    for (Index i = 0; i < n; ++i) {
        if (partner[partner[i]] != i)
            return {};
        for (Index j = 0; j < n; ++j)
            if (j != partner[i] && std::abs(g.g(i, j)) > tol)
                return {};
    }
    return partner;
}

namespace {

double dimer_average(const std::vector<Index>& partner, Index w, Index unit) {
    const Index n = Index(partner.size());
    const Index starts = n / unit;
    double cut = 0;
    for (Index k = 0; k < starts; ++k) {
        const Index s = k * unit;
        for (Index i = 0; i < w; ++i) {
            const Index p = partner[wrap(s + i, n)];
            if (wrap(p - s, n) >= w)
                cut += 1;
        }
    }
    return 0.5 * std::log(2.0) * cut / double(starts);
}

} // namespace

double average_entropy_profile(const CovarianceMatrix& g, Index l, Index unit) {
    const Index n = g.majoranas();
    if (unit < 1 || n % unit)
        fail(ErrorKind::Validation, "unit must divide the Majorana count");
    const Index units = n / unit;
    if (l < 1 || l >= units)
        fail(ErrorKind::Validation, "window length out of range");
    const auto partner = dimer_partners(g);
    if (!partner.empty())
        return dimer_average(partner, l * unit, unit);
    double s = 0;
    for (Index k = 0; k < units; ++k)
        s += entanglement_entropy_majoranas(g, k * unit, l * unit);
    return s / double(units);
}

std::vector<double> entropy_profile(const CovarianceMatrix& g, Index lmax, Index unit) {
    const Index n = g.majoranas();
    const Index units = n / unit;
    if (lmax <= 0)
        lmax = units / 2;
    std::vector<double> out(lmax + 1, 0.0);
    const auto partner = dimer_partners(g);
    for (Index l = 1; l <= lmax; ++l) {
        if (!partner.empty()) {
            out[l] = dimer_average(partner, l * unit, unit);
            continue;
        }
        double s = 0;
        for (Index k = 0; k < units; ++k)
            s += entanglement_entropy_majoranas(g, k * unit, l * unit);
        out[l] = s / double(units);
    }
    return out;
}

std::vector<double> pair_frequency(const CovarianceMatrix& g) {
    const Index n = g.majoranas();
    std::vector<double> hist(n / 2 + 1, 0.0);
    double total = 0;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            if (std::abs(g.g(i, j)) > 0.5) {
                hist[std::min(j - i, n - (j - i))] += 1;
                total += 1;
            }
    if (total > 0)
        for (double& h : hist)
            h /= total;
    return hist;
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    LinearFit f;
    const size_t n = x.size();
    f.points = Index(n);
    if (n < 2)
        fail(ErrorKind::Numerical, "fit needs at least two points");
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / double(n);
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / double(n);
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0)
        fail(ErrorKind::Numerical, "degenerate fit abscissae");
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double r = 0;
    for (size_t i = 0; i < n; ++i) {
        const double e = y[i] - (f.slope * x[i] + f.intercept);
        r += e * e;
    }
    f.residual = std::sqrt(r / double(n));
    return f;
}

LinearFit power_law_fit(const std::vector<double>& x, const std::vector<double>& y, double lo,
                        double hi) {
    std::vector<double> lx, ly;
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] >= lo && x[i] <= hi && y[i] > 0) {
            lx.push_back(std::log(x[i]));
            ly.push_back(std::log(y[i]));
        }
    return linear_fit(lx, ly);
}

CardyFit calabrese_cardy_fit(const std::vector<double>& profile, Index L, Index lmin, Index lmax) {
    std::vector<double> x, y;
    for (Index l = std::max<Index>(lmin, 1); l <= lmax && l < Index(profile.size()); ++l) {
        x.push_back(std::log(double(L) / kPi * std::sin(kPi * double(l) / double(L))));
        y.push_back(profile[l]);
    }
    CardyFit c;
    c.fit = linear_fit(x, y);
    c.c = 3 * c.fit.slope;
    c.epsilon = std::exp(-c.fit.intercept / c.fit.slope);
    return c;
}

std::vector<double> averaged_correlator(const CovarianceMatrix& g, const std::string& which,
                                        Index dmin, Index dmax) {
    const Index L = g.sites();
    std::vector<double> out;
    if (which == "sigma") {
        // one elimination per start covers every distance
        std::vector<double> acc(dmax + 1, 0.0);
        for (Index j = 0; j < L; ++j) {
            const auto idx = cyclic_range(2 * j + 1, 2 * dmax, g.majoranas());
            const auto pf = leading_pfaffians(principal(g.g, idx));
            for (Index d = dmin; d <= dmax; ++d)
                acc[d] += std::abs(pf[d - 1]);
        }
        for (Index d = dmin; d <= dmax; ++d)
            out.push_back(acc[d] / double(L));
        return out;
    }
    for (Index d = dmin; d <= dmax; ++d) {
        double s = 0;
        for (Index j = 0; j < L; ++j) {
            if (which == "psi")
                s += std::abs(fermion_correlator(g, j, j + d));
            else if (which == "epsilon")
                s += std::abs(epsilon_correlator(g, j, j + d));
            else if (which == "sse")
                s += std::abs(sigma_sigma_epsilon(g, j, d));
            else
                fail(ErrorKind::Validation, "unknown correlator '" + which + "'");
        }
        out.push_back(s / double(L));
    }
    return out;
}

ConformalReport fit_conformal_report(const CovarianceMatrix& g, FitWindows w) {
    ConformalReport r;
    const Index L = g.sites();
    if (w.dmax <= 0)
        w.dmax = L / 8;
    if (w.lmax <= 0)
        w.lmax = L / 2;
    if (w.dmax < w.dmin + 1)
        fail(ErrorKind::Validation, "correlator fit window is empty");
    r.windows = w;
    r.energyDensity = energy_density_ising(g);

    std::vector<double> ds;
    for (Index d = w.dmin; d <= w.dmax; ++d)
        ds.push_back(double(d));
    const double lo = double(w.dmin), hi = double(w.dmax);

    const auto psi = averaged_correlator(g, "psi", w.dmin, w.dmax);
    const auto eps = averaged_correlator(g, "epsilon", w.dmin, w.dmax);
    const auto sig = averaged_correlator(g, "sigma", w.dmin, w.dmax);
    const auto fp = power_law_fit(ds, psi, lo, hi);
    const auto fe = power_law_fit(ds, eps, lo, hi);
    const auto fs = power_law_fit(ds, sig, lo, hi);
    r.deltaPsi = -fp.slope / 2;
    r.deltaEpsilon = -fe.slope / 2;
    r.deltaSigma = -fs.slope / 2;
    r.cPsi = std::exp(fp.intercept);
    r.cEpsilon = std::exp(fe.intercept);
    r.cSigma = std::exp(fs.intercept);
    r.diagnostics["psi"] = fp;
    r.diagnostics["epsilon"] = fe;
    r.diagnostics["sigma"] = fs;

    // three-point amplitude with the exponent fixed by the two-point fits
    const Index dsse = std::min(w.dmax, (L - 1) / 4);
    const auto sse = averaged_correlator(g, "sse", w.dmin, dsse);
    const double p = 2 * r.deltaSigma + r.deltaEpsilon;
    std::vector<double> lk;
    for (size_t i = 0; i < sse.size(); ++i)
        if (sse[i] > 0)
            lk.push_back(std::log(sse[i]) + p * std::log(double(w.dmin + Index(i))));
    double K = 0, spread = 0;
    if (!lk.empty()) {
        const double m = std::accumulate(lk.begin(), lk.end(), 0.0) / double(lk.size());
        for (double v : lk)
            spread += (v - m) * (v - m);
        spread = std::sqrt(spread / double(lk.size()));
        K = std::exp(m);
    }
    r.structureConstant = K * std::pow(2.0, r.deltaEpsilon) / (r.cSigma * std::sqrt(r.cEpsilon));
    LinearFit fk;
    fk.slope = -p;
    fk.intercept = std::log(K);
    fk.residual = spread;
    fk.points = Index(lk.size());
    r.diagnostics["sse"] = fk;

    const auto prof = entropy_profile(g, w.lmax, 2);
    const auto cc = calabrese_cardy_fit(prof, L, w.lmin, w.lmax);
    r.centralCharge = cc.c;
    r.cutoff = cc.epsilon;
    r.diagnostics["entropy"] = cc.fit;

    r.profiles.push_back({"psi", psi});
    r.profiles.push_back({"epsilon", eps});
    r.profiles.push_back({"sigma", sig});
    r.profiles.push_back({"sse", sse});
    r.profiles.push_back({"entropy", std::vector<double>(prof.begin() + 1, prof.end())});
    return r;
}

std::string report_to_text(const ConformalReport& r) {
    std::ostringstream os;
    os << "energy_density=" << fmt17(r.energyDensity) << '\n'
       << "central_charge=" << fmt17(r.centralCharge) << '\n'
       << "entropy_cutoff=" << fmt17(r.cutoff) << '\n'
       << "delta_psi=" << fmt17(r.deltaPsi) << '\n'
       << "delta_epsilon=" << fmt17(r.deltaEpsilon) << '\n'
       << "delta_sigma=" << fmt17(r.deltaSigma) << '\n'
       << "c_sigma_sigma_epsilon=" << fmt17(r.structureConstant) << '\n'
       << "c_psi_psi=" << fmt17(r.cPsi) << '\n'
       << "c_epsilon_epsilon=" << fmt17(r.cEpsilon) << '\n'
       << "c_sigma_sigma=" << fmt17(r.cSigma) << '\n'
       << "window.dmin=" << r.windows.dmin << '\n'
       << "window.dmax=" << r.windows.dmax << '\n'
       << "window.lmin=" << r.windows.lmin << '\n'
       << "window.lmax=" << r.windows.lmax << '\n';
    for (const auto& [k, f] : r.diagnostics)
        os << "fit." << k << ".slope=" << fmt17(f.slope) << '\n'
           << "fit." << k << ".intercept=" << fmt17(f.intercept) << '\n'
           << "fit." << k << ".residual=" << fmt17(f.residual) << '\n'
           << "fit." << k << ".points=" << f.points << '\n';
    return os.str();
}

Saturation detect_saturation(const std::vector<double>& profile, double tol) {
    // profile[l] for l = 1..lmax, index 0 unused
    Saturation s;
    const Index lmax = Index(profile.size()) - 1;
    if (lmax < 4)
        return s;
    double lo = INFINITY, hi = -INFINITY, sum = 0;
    Index cnt = 0;
    for (Index l = lmax / 2; l <= lmax; ++l) {
        lo = std::min(lo, profile[l]);
        hi = std::max(hi, profile[l]);
        sum += profile[l];
        ++cnt;
    }
    s.plateau = sum / double(cnt);
    s.gapped = hi - lo < tol;
    for (Index l = 1; l <= lmax; ++l)
        if (profile[l] >= s.plateau - tol) {
            s.onset = l;
            break;
        }
    return s;
}

double correlation_length(const std::vector<double>& profile, double c, double a) {
    const Saturation s = detect_saturation(profile);
    if (!s.gapped)
        fail(ErrorKind::NotGapped, "entropy profile does not saturate within L/2");
    return a * std::exp(3 * s.plateau / c);
}

} // namespace mgnet
