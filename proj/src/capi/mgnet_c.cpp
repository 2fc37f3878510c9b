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

#include "mgnet/mgnet.h"

#include "core/observables.hpp"
#include "core/optimize.hpp"
#include "core/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>

struct mgnet_layout {
    mgnet::NetworkLayout layout;
};

struct mgnet_state {
    mgnet::CovarianceMatrix covariance;
    double logZ = 0;
    bool covariancePath = false;
    int tiles = 0;
};

struct mgnet_report {
    mgnet::ConformalReport report;
};

struct mgnet_search {
    mgnet::SearchResult result;
};

namespace {

thread_local std::string last_error;

mgnet_status set_error(mgnet_status s, const std::string& msg) {
    last_error = msg;
    return s;
}

template <class F>
mgnet_status guarded(F&& f) {
    try {
        last_error.clear();
        f();
        return MGNET_OK;
    } catch (const mgnet::Error& e) {
        return set_error(static_cast<mgnet_status>(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(MGNET_E_CAPACITY, "out of memory");
    } catch (const std::exception& e) {
        return set_error(MGNET_E_INTERNAL, e.what());
    } catch (...) {
        return set_error(MGNET_E_INTERNAL, "unknown failure");
    }
}

void require(bool ok, const char* what) {
    if (!ok)
        throw mgnet::Error(static_cast<mgnet::ErrorKind>(MGNET_E_ARGUMENT), what);
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class T>
void put(T* dst, T v) {
    if (dst)
        *dst = v;
}

mgnet_layout* wrap(mgnet::NetworkLayout l) { return new mgnet_layout{std::move(l)}; }

} // namespace

extern "C" {

const char* mgnet_version(void) { return "0.1.0"; }

const char* mgnet_last_error(void) { return last_error.c_str(); }

const char* mgnet_status_name(mgnet_status s) {
    switch (s) {
    case MGNET_OK: return "ok";
    case MGNET_E_VALIDATION: return "validation";
    case MGNET_E_NUMERICAL: return "numerical";
    case MGNET_E_SINGULAR: return "singular";
    case MGNET_E_CAPACITY: return "capacity";
    case MGNET_E_GEOMETRY: return "geometry";
    case MGNET_E_DEGENERATE: return "degenerate";
    case MGNET_E_NOT_GAPPED: return "not_gapped";
    case MGNET_E_CONVERSION: return "conversion";
    case MGNET_E_IO: return "io";
    case MGNET_E_ARGUMENT: return "argument";
    case MGNET_E_INTERNAL: return "internal";
    }
    return "unknown";
}

void mgnet_free_string(char* s) { std::free(s); }

mgnet_status mgnet_layout_regular(int q, double cutoff, int chi, mgnet_boundary bc,
                                  mgnet_layout** out) {
    return guarded([&] {
        require(out, "out is null");
        *out = wrap(mgnet::build_regular(q, cutoff, chi,
                                         bc == MGNET_PERIODIC ? mgnet::Boundary::Periodic
                                                              : mgnet::Boundary::Antiperiodic));
    });
}

mgnet_status mgnet_layout_happy(int layers, mgnet_layout** out) {
    return guarded([&] {
        require(out, "out is null");
        *out = wrap(mgnet::build_happy(layers));
    });
}

mgnet_status mgnet_layout_happy_growth(const char* word, mgnet_layout** out) {
    return guarded([&] {
        require(out && word, "null argument");
        *out = wrap(mgnet::build_happy_growth(word));
    });
}

mgnet_status mgnet_layout_mmera(int layers, mgnet_layout** out) {
    return guarded([&] {
        require(out, "out is null");
        *out = wrap(mgnet::build_mmera(layers));
    });
}

mgnet_status mgnet_layout_ir_cutoff(const mgnet_layout* in, double region, mgnet_fill fill,
                                    mgnet_layout** out) {
    return guarded([&] {
        require(in && out, "null argument");
        require(fill == MGNET_FILL_ZERO || fill == MGNET_FILL_ONE, "fill must be zero or one");
        *out = wrap(mgnet::apply_ir_cutoff(in->layout, region,
                                           fill == MGNET_FILL_ONE ? mgnet::Fill::One
                                                                  : mgnet::Fill::Zero));
    });
}

mgnet_status mgnet_layout_info(const mgnet_layout* l, int* tiles, long* boundary_sites) {
    return guarded([&] {
        require(l, "layout is null");
        put(tiles, int(l->layout.tiles.size()));
        put(boundary_sites, long(l->layout.boundarySites()));
    });
}

mgnet_status mgnet_layout_parameter_names(const mgnet_layout* l, char** out) {
    return guarded([&] {
        require(l && out, "null argument");
        std::string s;
        for (const auto& n : mgnet::parameter_names(l->layout))
            s += (s.empty() ? "" : ",") + n;
        *out = dup(s);
    });
}

mgnet_status mgnet_layout_json(const mgnet_layout* l, char** out) {
    return guarded([&] {
        require(l && out, "null argument");
        *out = dup(mgnet::layout_to_json(l->layout));
    });
}

void mgnet_layout_free(mgnet_layout* l) { delete l; }

mgnet_status mgnet_execute(const mgnet_layout* l, int nparams, const char* const* names,
                           const double* values, mgnet_state** out) {
    return guarded([&] {
        require(l && out, "null argument");
        require(nparams == 0 || (names && values), "parameter arrays are null");
        mgnet::Params p;
        for (int i = 0; i < nparams; ++i)
            p[names[i]] = values[i];
        mgnet::BoundaryState b = mgnet::execute(l->layout, p);
        *out = new mgnet_state{std::move(b.covariance), b.logZ, b.covariancePath, b.tiles};
    });
}

mgnet_status mgnet_state_from_covariance(const double* g, long majoranas, mgnet_state** out) {
    return guarded([&] {
        require(g && out && majoranas >= 0, "bad argument");
        mgnet::Mat m(majoranas, majoranas);
        for (long i = 0; i < majoranas; ++i)
            for (long j = 0; j < majoranas; ++j)
                m(i, j) = g[i * majoranas + j];
        *out = new mgnet_state{mgnet::CovarianceMatrix(std::move(m)), 0, true, 0};
    });
}

mgnet_status mgnet_state_info(const mgnet_state* s, long* majoranas, double* log_z,
                              int* covariance_path, double* norm_factor) {
    return guarded([&] {
        require(s, "state is null");
        put(majoranas, long(s->covariance.majoranas()));
        put(log_z, s->logZ);
        put(covariance_path, int(s->covariancePath));
        put(norm_factor, s->tiles > 0 ? mgnet::normalization_factor(s->tiles, s->logZ) : 1.0);
    });
}

mgnet_status mgnet_state_covariance(const mgnet_state* s, double* buf, long len) {
    return guarded([&] {
        require(s && buf, "null argument");
        const long n = long(s->covariance.majoranas());
        require(len >= n * n, "buffer too small");
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                buf[i * n + j] = s->covariance.g(i, j);
    });
}

mgnet_status mgnet_state_write_csv(const mgnet_state* s, const char* path) {
    return guarded([&] {
        require(s && path, "null argument");
        std::ofstream f(path);
        if (!f)
            mgnet::fail(mgnet::ErrorKind::Io, std::string("cannot open ") + path);
        mgnet::write_csv(f, s->covariance.g);
        if (!f)
            mgnet::fail(mgnet::ErrorKind::Io, std::string("write failed for ") + path);
    });
}

void mgnet_state_free(mgnet_state* s) { delete s; }

mgnet_status mgnet_energy_density(const mgnet_state* s, double* out) {
    return guarded([&] {
        require(s && out, "null argument");
        *out = mgnet::energy_density_ising(s->covariance);
    });
}

mgnet_status mgnet_invariants(const mgnet_state* s, double* purity, double* parity) {
    return guarded([&] {
        require(s, "state is null");
        put(purity, mgnet::purity_error(s->covariance));
        put(parity, mgnet::parity_error(s->covariance));
    });
}

mgnet_status mgnet_entropy_profile(const mgnet_state* s, long lmax, long unit, double* out) {
    return guarded([&] {
        require(s && out && lmax > 0 && unit > 0, "bad argument");
        const auto p = mgnet::entropy_profile(s->covariance, lmax, unit);
        for (long l = 1; l <= lmax; ++l)
            out[l - 1] = p[l];
    });
}

mgnet_status mgnet_pair_frequency(const mgnet_state* s, double* out, long len) {
    return guarded([&] {
        require(s && out, "null argument");
        const auto h = mgnet::pair_frequency(s->covariance);
        require(len >= long(h.size()), "buffer too small");
        std::copy(h.begin(), h.end(), out);
    });
}

mgnet_status mgnet_correlator(const mgnet_state* s, const char* which, long dmin, long dmax,
                              double* out) {
    return guarded([&] {
        require(s && which && out && dmin >= 1 && dmax >= dmin, "bad argument");
        const auto v = mgnet::averaged_correlator(s->covariance, which, dmin, dmax);
        std::copy(v.begin(), v.end(), out);
    });
}

mgnet_status mgnet_conformal_report(const mgnet_state* s, long dmin, long dmax, long lmin,
                                    long lmax, mgnet_report** out) {
    return guarded([&] {
        require(s && out, "null argument");
        mgnet::FitWindows w;
        if (dmin > 0)
            w.dmin = dmin;
        w.dmax = dmax;
        if (lmin > 0)
            w.lmin = lmin;
        w.lmax = lmax;
        *out = new mgnet_report{mgnet::fit_conformal_report(s->covariance, w)};
    });
}

mgnet_status mgnet_report_get(const mgnet_report* r, const char* key, double* out) {
    return guarded([&] {
        require(r && key && out, "null argument");
        std::istringstream is(mgnet::report_to_text(r->report));
        std::string line;
        while (std::getline(is, line)) {
            const auto eq = line.find('=');
            if (line.compare(0, eq, key) == 0 && eq == std::strlen(key)) {
                *out = std::stod(line.substr(eq + 1));
                return;
            }
        }
        mgnet::fail(static_cast<mgnet::ErrorKind>(MGNET_E_ARGUMENT),
                    std::string("no report field '") + key + "'");
    });
}

mgnet_status mgnet_report_text(const mgnet_report* r, char** out) {
    return guarded([&] {
        require(r && out, "null argument");
        *out = dup(mgnet::report_to_text(r->report));
    });
}

void mgnet_report_free(mgnet_report* r) { delete r; }

mgnet_status mgnet_fit_cardy(const double* profile, long n, long length, long lmin, long lmax,
                             double* c, double* cutoff) {
    return guarded([&] {
        require(profile && n > 0, "bad argument");
        std::vector<double> p(1, 0.0);
        p.insert(p.end(), profile, profile + n);
        const auto f = mgnet::calabrese_cardy_fit(p, length, lmin, lmax);
        put(c, f.c);
        put(cutoff, f.epsilon);
    });
}

mgnet_status mgnet_fit_power_law(const double* x, const double* y, long n, double lo, double hi,
                                 double* slope, double* intercept) {
    return guarded([&] {
        require(x && y && n > 0, "bad argument");
        const auto f = mgnet::power_law_fit(std::vector<double>(x, x + n),
                                            std::vector<double>(y, y + n), lo, hi);
        put(slope, f.slope);
        put(intercept, f.intercept);
    });
}

mgnet_status mgnet_correlation_length(const double* profile, long n, double c, double* xi) {
    return guarded([&] {
        require(profile && xi && n > 0, "bad argument");
        std::vector<double> p(1, 0.0);
        p.insert(p.end(), profile, profile + n);
        *xi = mgnet::correlation_length(p, c);
    });
}

mgnet_status mgnet_find_critical(const mgnet_layout* l, int threads, mgnet_search** out) {
    return guarded([&] {
        require(l && out, "null argument");
        mgnet::CriticalOptions o;
        o.threads = threads > 0 ? threads : 1;
        *out = new mgnet_search{mgnet::find_critical_a(l->layout, o)};
    });
}

mgnet_status mgnet_optimize_mmera(int layers, const double* init, int full, double tol,
                                  int max_evaluations, mgnet_search** out) {
    return guarded([&] {
        require(out, "out is null");
        mgnet::SimplexOptions o;
        if (tol > 0)
            o.tol = tol;
        if (max_evaluations > 0)
            o.maxEvaluations = max_evaluations;
        std::vector<double> x = full ? std::vector<double>{0.6, 0.5, 0.2, 0.6, 0.2, 0.6}
                                     : std::vector<double>{0.6, 0.5, 0.2};
        if (init)
            x.assign(init, init + x.size());
        *out = new mgnet_search{full ? mgnet::optimize_mmera_full(layers, x, o)
                                     : mgnet::optimize_mmera(layers, x, o)};
    });
}

mgnet_status mgnet_search_info(const mgnet_search* r, int* nparams, double* objective,
                               int* evaluations, int* converged, int* flag) {
    return guarded([&] {
        require(r, "search is null");
        put(nparams, int(r->result.params.size()));
        put(objective, r->result.objective);
        put(evaluations, r->result.evaluations);
        put(converged, int(r->result.converged));
        put(flag, int(r->result.multimodal || r->result.symmetric));
    });
}

mgnet_status mgnet_search_param(const mgnet_search* r, int i, const char** name, double* value) {
    return guarded([&] {
        require(r && i >= 0 && i < int(r->result.params.size()), "bad parameter index");
        put(name, r->result.names[i].c_str());
        put(value, r->result.params[i]);
    });
}

mgnet_status mgnet_search_history_csv(const mgnet_search* r, char** out) {
    return guarded([&] {
        require(r && out, "null argument");
        std::ostringstream os;
        mgnet::write_history_csv(os, r->result);
        *out = dup(os.str());
    });
}

void mgnet_search_free(mgnet_search* r) { delete r; }

mgnet_status mgnet_verify(unsigned long seed, char** table, int* failures) {
    return guarded([&] {
        const auto checks = mgnet::run_verify_suite(seed);
        int bad = 0;
        for (const auto& c : checks)
            bad += !c.pass;
        put(failures, bad);
        if (table)
            *table = dup(mgnet::format_checks(checks));
    });
}

} // extern "C"
