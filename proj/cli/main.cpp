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

#include "config.hpp"

#include "mgnet/mgnet.h"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using mgnet::cli::ConfigError;
using mgnet::cli::ExperimentConfig;

namespace {

// C API failure carrying the task it happened in
struct TaskError : std::runtime_error {
    TaskError(const std::string& task, mgnet_status s)
        : std::runtime_error(task + ": " + mgnet_status_name(s) + " error: " + mgnet_last_error()) {}
};

struct Call {
    std::string task;
    void operator()(mgnet_status s) const {
        if (s != MGNET_OK)
            throw TaskError(task, s);
    }
};

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct Freer {
    void operator()(mgnet_layout* p) const { mgnet_layout_free(p); }
    void operator()(mgnet_state* p) const { mgnet_state_free(p); }
    void operator()(mgnet_report* p) const { mgnet_report_free(p); }
    void operator()(mgnet_search* p) const { mgnet_search_free(p); }
    void operator()(char* p) const { mgnet_free_string(p); }
};
template <class T>
using Owned = std::unique_ptr<T, Freer>;

int thread_count() {
    if (const char* env = std::getenv("MGNET_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0)
            return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// ---- output schemas ----

void check_kv(const fs::path& p, const std::vector<std::string>& required) {
    std::ifstream f(p);
    if (!f)
        throw std::runtime_error("schema: cannot read " + p.string());
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(f, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::runtime_error("schema: " + p.string() + ": malformed line '" + line + "'");
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    for (const auto& k : required)
        if (!kv.count(k))
            throw std::runtime_error("schema: " + p.string() + ": missing key " + k);
}

bool numeric(const std::string& s) {
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    return !s.empty() && end == s.c_str() + s.size();
}

// header row then rows of the same width, all numeric; header "" means none
void check_csv(const fs::path& p, const std::string& header, long expectRows = -1) {
    std::ifstream f(p);
    if (!f)
        throw std::runtime_error("schema: cannot read " + p.string());
    std::string line;
    long width = -1, rows = 0;
    if (!header.empty()) {
        std::getline(f, line);
        if (line != header)
            throw std::runtime_error("schema: " + p.string() + ": header '" + line + "'");
        width = long(std::count(header.begin(), header.end(), ',')) + 1;
    }
    while (std::getline(f, line)) {
        std::istringstream is(line);
        std::string cell;
        long n = 0;
        while (std::getline(is, cell, ',')) {
            if (!numeric(cell))
                throw std::runtime_error("schema: " + p.string() + ": non-numeric cell '" + cell + "'");
            ++n;
        }
        if (width < 0)
            width = n;
        if (n != width)
            throw std::runtime_error("schema: " + p.string() + ": ragged row " + std::to_string(rows));
        ++rows;
    }
    if (expectRows >= 0 && rows != expectRows)
        throw std::runtime_error("schema: " + p.string() + ": expected " +
                                 std::to_string(expectRows) + " rows");
}

void write_text(const fs::path& p, const std::string& s) {
    std::ofstream f(p);
    f << s;
    if (!f)
        throw std::runtime_error("cannot write " + p.string());
}

void write_profile(const fs::path& p, const std::string& header, long first,
                   const std::vector<double>& v) {
    std::ostringstream os;
    os << header << '\n';
    for (size_t i = 0; i < v.size(); ++i)
        os << first + long(i) << ',' << fmt17(v[i]) << '\n';
    write_text(p, os.str());
    check_csv(p, header, long(v.size()));
}

// ---- run ----

class Experiment {
public:
    explicit Experiment(ExperimentConfig cfg) : cfg_(std::move(cfg)), out_(cfg_.outputDir) {}

    void run() {
        fs::create_directories(out_);
        const auto t0 = std::chrono::steady_clock::now();
        build_layout();
        for (const auto& task : mgnet::cli::known_tasks()) {
            if (!cfg_.has_task(task))
                continue;
            const auto s = std::chrono::steady_clock::now();
            run_task(task);
            timings_.push_back({task, std::chrono::duration<double>(
                                          std::chrono::steady_clock::now() - s).count()});
        }
        total_ = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        write_manifest();
    }

private:
    void build_layout() {
        Call call{"layout"};
        mgnet_layout* l = nullptr;
        if (cfg_.geometry == "regular")
            call(mgnet_layout_regular(cfg_.q, cfg_.cutoff, cfg_.chi,
                                      cfg_.boundary == "periodic" ? MGNET_PERIODIC
                                                                  : MGNET_ANTIPERIODIC,
                                      &l));
        else if (cfg_.geometry == "happy")
            call(cfg_.growth.empty() ? mgnet_layout_happy(cfg_.layers, &l)
                                     : mgnet_layout_happy_growth(cfg_.growth.c_str(), &l));
        else
            call(mgnet_layout_mmera(cfg_.layers, &l));
        layout_.reset(l);
        if (cfg_.irCutoff) {
            mgnet_layout* c = nullptr;
            call(mgnet_layout_ir_cutoff(layout_.get(), cfg_.irRegion,
                                        cfg_.irFill == "one" ? MGNET_FILL_ONE : MGNET_FILL_ZERO, &c));
            layout_.reset(c);
        }
        call(mgnet_layout_info(layout_.get(), &tiles_, &sites_));
    }

    mgnet_state* state() {
        if (!state_) {
            Call call{"execute"};
            std::vector<const char*> names;
            std::vector<double> values;
            for (const auto& [k, v] : cfg_.params) {
                names.push_back(k.c_str());
                values.push_back(v);
            }
            mgnet_state* s = nullptr;
            call(mgnet_execute(layout_.get(), int(names.size()), names.data(), values.data(), &s));
            state_.reset(s);
            long n = 0;
            call(mgnet_state_info(s, &n, nullptr, nullptr, nullptr));
            majoranas_ = n;
        }
        return state_.get();
    }

    void run_task(const std::string& task) {
        Call call{task};
        if (task == "criticalSearch") {
            mgnet_search* r = nullptr;
            call(mgnet_find_critical(layout_.get(), thread_count(), &r));
            Owned<mgnet_search> own(r);
            write_search(r, "critical", call);
            double a = 0;
            call(mgnet_search_param(r, 0, nullptr, &a));
            cfg_.params.clear();
            cfg_.params["a"] = a;
            state_.reset();
        } else if (task == "mmeraOptimize") {
            mgnet_search* r = nullptr;
            call(mgnet_optimize_mmera(cfg_.layers,
                                      cfg_.optimizeInit.empty() ? nullptr : cfg_.optimizeInit.data(),
                                      cfg_.optimizeFull, cfg_.optimizeTol,
                                      cfg_.optimizeMaxEvaluations, &r));
            Owned<mgnet_search> own(r);
            write_search(r, "mmera", call);
            int np = 0;
            call(mgnet_search_info(r, &np, nullptr, nullptr, nullptr, nullptr));
            for (int i = 0; i < np; ++i) {
                const char* name = nullptr;
                double v = 0;
                call(mgnet_search_param(r, i, &name, &v));
                cfg_.params[name] = v;
            }
            state_.reset();
        } else if (task == "covariance") {
            mgnet_state* s = state();
            const fs::path p = out_ / "covariance.csv";
            call(mgnet_state_write_csv(s, p.string().c_str()));
            check_csv(p, "", majoranas_);
            double logZ = 0, f = 0, e = 0, pur = 0, par = 0;
            int cov = 0;
            call(mgnet_state_info(s, nullptr, &logZ, &cov, &f));
            call(mgnet_energy_density(s, &e));
            call(mgnet_invariants(s, &pur, &par));
            std::ostringstream os;
            os << "majoranas=" << majoranas_ << "\nsites=" << majoranas_ / 2
               << "\ntiles=" << tiles_ << "\nlog_norm=" << fmt17(logZ)
               << "\nnormalization_factor=" << fmt17(f) << "\ncovariance_path=" << cov
               << "\nenergy_density=" << fmt17(e) << "\npurity_error=" << fmt17(pur)
               << "\nparity_error=" << fmt17(par) << '\n';
            write_text(out_ / "state.kv", os.str());
            check_kv(out_ / "state.kv", {"majoranas", "log_norm", "energy_density"});
        } else if (task == "correlators") {
            mgnet_state* s = state();
            const long L = majoranas_ / 2;
            const long dmax = cfg_.dmax > 0 ? cfg_.dmax : std::max(1L, L / 8);
            for (const char* which : {"psi", "epsilon", "sigma", "sse"}) {
                long top = dmax;
                if (std::string(which) == "sse")
                    top = std::min(dmax, (L - 1) / 4);
                if (top < 1)
                    continue;
                std::vector<double> v(top);
                call(mgnet_correlator(s, which, 1, top, v.data()));
                write_profile(out_ / (std::string("correlator_") + which + ".csv"), "d,value", 1, v);
            }
        } else if (task == "entropyProfile") {
            mgnet_state* s = state();
            const long L = majoranas_ / 2;
            const long lmax = cfg_.lmax > 0 ? cfg_.lmax : L / 2;
            std::vector<double> v(lmax);
            call(mgnet_entropy_profile(s, lmax, 2, v.data()));
            write_profile(out_ / "entropy_profile.csv", "l,entropy", 1, v);
            const long lmin = cfg_.lmin > 0 ? cfg_.lmin : std::max(2L, long(std::log2(cfg_.chi)));
            double c = 0, eps = 0;
            call(mgnet_fit_cardy(v.data(), lmax, L, lmin, lmax, &c, &eps));
            std::ostringstream os;
            os << "central_charge=" << fmt17(c) << "\nentropy_cutoff=" << fmt17(eps)
               << "\nlength=" << L << "\nlmin=" << lmin << "\nlmax=" << lmax << '\n';
            double xi = 0;
            if (mgnet_correlation_length(v.data(), lmax, c > 0 ? c : 0.5, &xi) == MGNET_OK)
                os << "saturated=1\ncorrelation_length=" << fmt17(xi) << '\n';
            else
                os << "saturated=0\n";
            write_text(out_ / "entropy_fit.kv", os.str());
            check_kv(out_ / "entropy_fit.kv", {"central_charge", "entropy_cutoff", "saturated"});
        } else if (task == "pairFrequency") {
            mgnet_state* s = state();
            std::vector<double> h(majoranas_ / 2 + 1);
            call(mgnet_pair_frequency(s, h.data(), long(h.size())));
            write_profile(out_ / "pair_frequency.csv", "d,frequency", 1,
                          std::vector<double>(h.begin() + 1, h.end()));
            std::vector<double> d(h.size());
            for (size_t i = 0; i < d.size(); ++i)
                d[i] = double(i);
            double slope = 0, icpt = 0;
            std::ostringstream os;
            if (mgnet_fit_power_law(d.data(), h.data(), long(h.size()), 4, double(majoranas_ / 8),
                                    &slope, &icpt) == MGNET_OK)
                os << "exponent=" << fmt17(slope) << "\nintercept=" << fmt17(icpt) << '\n';
            else
                os << "exponent=nan\nintercept=nan\n";
            os << "dmin=4\ndmax=" << majoranas_ / 8 << '\n';
            write_text(out_ / "pair_fit.kv", os.str());
            check_kv(out_ / "pair_fit.kv", {"exponent"});
        } else if (task == "conformalReport") {
            mgnet_state* s = state();
            mgnet_report* r = nullptr;
            call(mgnet_conformal_report(s, cfg_.dmin, cfg_.dmax, cfg_.lmin, cfg_.lmax, &r));
            Owned<mgnet_report> own(r);
            char* text = nullptr;
            call(mgnet_report_text(r, &text));
            Owned<char> t(text);
            write_text(out_ / "report.kv", text);
            check_kv(out_ / "report.kv", {"energy_density", "central_charge", "delta_psi",
                                          "delta_epsilon", "delta_sigma", "c_sigma_sigma_epsilon"});
        }
    }

    void write_search(mgnet_search* r, const std::string& stem, const Call& call) {
        int np = 0, evals = 0, conv = 0, flag = 0;
        double obj = 0;
        call(mgnet_search_info(r, &np, &obj, &evals, &conv, &flag));
        std::ostringstream os;
        for (int i = 0; i < np; ++i) {
            const char* name = nullptr;
            double v = 0;
            call(mgnet_search_param(r, i, &name, &v));
            os << "param." << name << '=' << fmt17(v) << '\n';
        }
        os << "objective=" << fmt17(obj) << "\nevaluations=" << evals << "\nconverged=" << conv
           << '\n'
           << (stem == "critical" ? "multimodal=" : "symmetric=") << flag << '\n';
        write_text(out_ / (stem + ".kv"), os.str());
        check_kv(out_ / (stem + ".kv"), {"objective", "evaluations", "converged"});
        char* csv = nullptr;
        call(mgnet_search_history_csv(r, &csv));
        Owned<char> own(csv);
        const fs::path h = out_ / (stem + "_history.csv");
        write_text(h, csv);
        const std::string s(csv);
        check_csv(h, s.substr(0, s.find('\n')));
    }

    void write_manifest() {
        std::ostringstream os;
        os << "tool=mgnet\nversion=" << mgnet_version() << '\n';
        const std::time_t now = std::time(nullptr);
        char stamp[64];
        std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        os << "timestamp=" << stamp << "\nthreads=" << thread_count() << '\n';
        for (const auto& [k, v] : cfg_.raw)
            os << "config." << k << '=' << v << '\n';
        for (const auto& [k, v] : cfg_.params)
            os << "resolved.params." << k << '=' << fmt17(v) << '\n';
        os << "layout.tiles=" << tiles_ << "\nlayout.boundary_sites=" << sites_ << '\n';
        for (const auto& [t, s] : timings_)
            os << "timing." << t << '=' << fmt17(s) << '\n';
        os << "timing.total=" << fmt17(total_) << '\n';
        write_text(out_ / "manifest.kv", os.str());
        check_kv(out_ / "manifest.kv", {"version", "timestamp", "timing.total"});
    }

    ExperimentConfig cfg_;
    fs::path out_;
    Owned<mgnet_layout> layout_;
    Owned<mgnet_state> state_;
    int tiles_ = 0;
    long sites_ = 0, majoranas_ = 0;
    std::vector<std::pair<std::string, double>> timings_;
    double total_ = 0;
};

int run_config(const ExperimentConfig& cfg) {
    mgnet::cli::validate(cfg);
    Experiment(cfg).run();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mgnet: matchgate tensor network contraction and boundary analysis"};
    app.require_subcommand(1);

    std::string configPath;
    auto* run = app.add_subcommand("run", "run the tasks of a config file");
    run->add_option("config", configPath, "key=value config file")->required();

    unsigned long seed = 20260101;
    auto* verify = app.add_subcommand("verify", "oracle equivalence and invariant checks");
    verify->add_option("--seed", seed, "random seed");

    std::string sweepPath, param;
    double from = 0, to = 0;
    int steps = 2;
    auto* sweep = app.add_subcommand("sweep", "run a config over a range of one parameter");
    sweep->add_option("config", sweepPath, "key=value config file")->required();
    sweep->add_option("--param", param, "parameter name")->required();
    sweep->add_option("--from", from, "first value")->required();
    sweep->add_option("--to", to, "last value")->required();
    sweep->add_option("--steps", steps, "number of values")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run)
            return run_config(mgnet::cli::load_config(configPath));
        if (*verify) {
            char* table = nullptr;
            int failures = 0;
            const mgnet_status s = mgnet_verify(seed, &table, &failures);
            if (s != MGNET_OK) {
                std::cerr << "verify: " << mgnet_status_name(s) << ": " << mgnet_last_error() << '\n';
                return 2;
            }
            std::cout << table;
            mgnet_free_string(table);
            std::cout << (failures ? "FAILED " : "OK ") << failures << " failing checks\n";
            return failures ? 1 : 0;
        }
        if (*sweep) {
            ExperimentConfig base = mgnet::cli::load_config(sweepPath);
            const fs::path root = base.outputDir;
            fs::create_directories(root);
            std::ostringstream index;
            index << "step,value\n";
            for (int i = 0; i < steps; ++i) {
                const double v = steps == 1 ? from : from + (to - from) * i / double(steps - 1);
                ExperimentConfig c = base;
                c.params[param] = v;
                c.raw["params." + param] = fmt17(v);
                char dir[32];
                std::snprintf(dir, sizeof dir, "sweep_%03d", i);
                c.outputDir = (root / dir).string();
                run_config(c);
                index << i << ',' << fmt17(v) << '\n';
            }
            write_text(root / "sweep.csv", index.str());
            check_csv(root / "sweep.csv", "step,value", steps);
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const TaskError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
