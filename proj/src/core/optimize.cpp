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

#include "core/optimize.hpp"

#include "core/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <thread>

namespace mgnet {

double critical_objective(const CovarianceMatrix& g) {
    const Index n = g.majoranas();
    if (n < 4)
        fail(ErrorKind::Degenerate, "boundary too small for a long-range correlation");
    // even distances only see parity zeros
    Index d = n / 2;
    if (d % 2 == 0)
        d -= 1;
    return majorana_mean_correlation(g, d);
}

SearchResult find_critical_a(const NetworkLayout& layout, const CriticalOptions& opt) {
    if (layout.geometry != Geometry::Regular)
        fail(ErrorKind::Validation, "critical search needs a regular tiling");
    if (!(opt.gridLo > 0 && opt.gridHi < 1 && opt.gridLo < opt.gridHi && opt.gridStep > 0))
        fail(ErrorKind::Validation, "critical search grid must lie inside (0, 1)");

    auto objective = [&](double a) {
        return critical_objective(execute(layout, Params{{"a", a}}).covariance);
    };

    std::vector<double> grid;
    for (int i = 0;; ++i) {
        const double a = opt.gridLo + i * opt.gridStep;
        if (a > opt.gridHi + 1e-12)
            break;
        grid.push_back(a);
    }
    std::vector<double> vals(grid.size());
    const int nt = std::max(1, std::min<int>(opt.threads, int(grid.size())));
    if (nt == 1) {
        for (size_t i = 0; i < grid.size(); ++i)
            vals[i] = objective(grid[i]);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errs(nt);
        for (int t = 0; t < nt; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (size_t i = t; i < grid.size(); i += nt)
                        vals[i] = objective(grid[i]);
                } catch (...) {
                    errs[t] = std::current_exception();
                }
            });
        for (auto& th : pool)
            th.join();
        for (auto& e : errs)
            if (e)
                std::rethrow_exception(e);
    }

    SearchResult r;
    r.names = {"a"};
    for (size_t i = 0; i < grid.size(); ++i)
        r.history.push_back({{grid[i]}, vals[i]});
    const size_t best = std::max_element(vals.begin(), vals.end()) - vals.begin();
    int peaks = 0;
    for (size_t i = 0; i < vals.size(); ++i) {
        const bool left = i == 0 || vals[i] > vals[i - 1];
        const bool right = i + 1 == vals.size() || vals[i] > vals[i + 1];
        peaks += left && right;
    }
    r.multimodal = peaks > 1;

    // golden section on the two grid cells around the best point
    const double g = (std::sqrt(5.0) - 1) / 2;
    double lo = std::max(grid[best] - opt.gridStep, 0.5 * grid.front());
    double hi = std::min(grid[best] + opt.gridStep, 0.5 * (1 + grid.back()));
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = objective(x1), f2 = objective(x2);
    r.history.push_back({{x1}, f1});
    r.history.push_back({{x2}, f2});
    while (hi - lo > opt.tol) {
        if (f1 > f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = objective(x1);
            r.history.push_back({{x1}, f1});
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = objective(x2);
            r.history.push_back({{x2}, f2});
        }
    }
    const double a = 0.5 * (lo + hi);
    const double fa = objective(a);
    r.history.push_back({{a}, fa});
    r.params = {a};
    r.objective = fa;
    r.evaluations = int(r.history.size());
    r.converged = true;
    if (vals[best] > fa) {
        r.params = {grid[best]};
        r.objective = vals[best];
    }
    return r;
}

SearchResult find_critical_a(int q, double cutoff, int chi, const CriticalOptions& opt) {
    return find_critical_a(build_regular(q, cutoff, chi), opt);
}

SearchResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                         std::vector<double> init, const SimplexOptions& opt) {
    const size_t n = init.size();
    if (n == 0)
        fail(ErrorKind::Validation, "nelder_mead needs at least one parameter");
    SearchResult r;
    struct Exhausted {};
    auto eval = [&](const std::vector<double>& x) {
        if (int(r.history.size()) >= opt.maxEvaluations)
            throw Exhausted{};
        double v = f(x);
        if (!std::isfinite(v))
            v = 1e300;
        r.history.push_back({x, v});
        return v;
    };

    using Point = std::vector<double>;
    std::vector<Point> xs(n + 1, init);
    for (size_t i = 0; i < n; ++i)
        xs[i + 1][i] += opt.step;
    std::vector<double> fs(n + 1, std::numeric_limits<double>::infinity());

    auto combine = [&](const Point& c, const Point& x, double t) {
        Point p(n);
        for (size_t k = 0; k < n; ++k)
            p[k] = c[k] + t * (x[k] - c[k]);
        return p;
    };

    std::vector<size_t> order(n + 1);
    // the budget is hard: an exhausted step keeps the simplex as it was
    try {
        for (size_t i = 0; i <= n; ++i)
            fs[i] = eval(xs[i]);
        while (true) {
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](size_t i, size_t j) { return fs[i] < fs[j]; });
            const size_t b = order.front(), w = order.back(), sw = order[n - 1];
            if (fs[w] - fs[b] <= opt.tol) {
                r.converged = true;
                break;
            }
            Point c(n, 0.0);
            for (size_t i = 0; i <= n; ++i)
                if (i != w)
                    for (size_t k = 0; k < n; ++k)
                        c[k] += xs[i][k] / double(n);

            const Point xr = combine(c, xs[w], -1.0);
            const double fr = eval(xr);
            if (fr < fs[b]) {
                const Point xe = combine(c, xs[w], -2.0);
                const double fe = eval(xe);
                if (fe < fr) {
                    xs[w] = xe;
                    fs[w] = fe;
                } else {
                    xs[w] = xr;
                    fs[w] = fr;
                }
            } else if (fr < fs[sw]) {
                xs[w] = xr;
                fs[w] = fr;
            } else {
                const bool outside = fr < fs[w];
                const Point xc = combine(c, outside ? xr : xs[w], 0.5);
                const double fc = eval(xc);
                if (fc < (outside ? fr : fs[w])) {
                    xs[w] = xc;
                    fs[w] = fc;
                } else {
                    for (size_t i = 0; i <= n; ++i)
                        if (i != b) {
                            const Point p = combine(xs[b], xs[i], 0.5);
                            fs[i] = eval(p);
                            xs[i] = p;
                        }
                }
            }
        }
    } catch (const Exhausted&) {
    }
    const size_t b = std::min_element(fs.begin(), fs.end()) - fs.begin();
    r.params = xs[b];
    r.objective = fs[b];
    r.evaluations = int(r.history.size());
    return r;
}

double mmera_energy(const NetworkLayout& layout, const Params& p) {
    return energy_density_ising(execute(layout, p).covariance);
}

namespace {

SearchResult run_mmera(int layers, std::vector<double> init, const SimplexOptions& opt,
                       const std::vector<std::string>& names) {
    if (layers < 1)
        fail(ErrorKind::Validation, "mMERA needs at least one layer");
    if (init.size() != names.size())
        fail(ErrorKind::Validation, "expected " + std::to_string(names.size()) + " initial values");
    const NetworkLayout lay = build_mmera(layers);
    auto f = [&](const std::vector<double>& x) {
        Params p;
        for (size_t k = 0; k < names.size(); ++k)
            p[names[k]] = x[k];
        try {
            return mmera_energy(lay, p);
        } catch (const Error&) {
            return std::numeric_limits<double>::infinity();
        }
    };
    SearchResult r = nelder_mead(f, std::move(init), opt);
    // one restart from the best vertex guards against a collapsed simplex
    if (r.converged) {
        SimplexOptions o = opt;
        o.maxEvaluations = std::max(0, opt.maxEvaluations - r.evaluations);
        SearchResult again = nelder_mead(f, r.params, o);
        r.history.insert(r.history.end(), again.history.begin(), again.history.end());
        if (again.objective < r.objective) {
            r.params = again.params;
            r.objective = again.objective;
        }
        r.converged = again.converged;
        r.evaluations = int(r.history.size());
    }
    r.names = names;
    return r;
}

} // namespace

SearchResult optimize_mmera(int layers, std::vector<double> init, const SimplexOptions& opt) {
    return run_mmera(layers, std::move(init), opt, {"a", "b", "c"});
}

SearchResult optimize_mmera_full(int layers, std::vector<double> init, const SimplexOptions& opt) {
    SearchResult r = run_mmera(layers, std::move(init), opt, {"a", "b", "c", "d", "e", "f"});
    const auto& x = r.params;
    r.symmetric = std::abs(x[2] - x[4]) < 0.01 &&
                  std::max(std::abs(x[0] - x[3]), std::abs(x[0] - x[5])) < 0.01;
    return r;
}

void write_history_csv(std::ostream& os, const SearchResult& r) {
    os << "iteration";
    for (const auto& n : r.names)
        os << ',' << n;
    os << ",objective\n";
    for (size_t i = 0; i < r.history.size(); ++i) {
        os << i;
        for (double v : r.history[i].first)
            os << ',' << fmt17(v);
        os << ',' << fmt17(r.history[i].second) << '\n';
    }
}

} // namespace mgnet
