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

#include "core/execute.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace mgnet {

struct SearchResult {
    std::vector<std::string> names;
    std::vector<double> params;
    double objective = 0;
    int evaluations = 0;
    bool converged = false;
    // grid values were not unimodal, the refinement bracket came from the grid
    bool multimodal = false;
    // mMERA full search: c ~ e and a ~ d ~ f within 0.01
    bool symmetric = false;
    std::vector<std::pair<std::vector<double>, double>> history;
};

// mean |Gamma_{k,k+d}| over all k with d the largest odd distance <= N/2
double critical_objective(const CovarianceMatrix& g);

struct CriticalOptions {
    double gridLo = 0.02, gridHi = 0.98, gridStep = 0.01;
    double tol = 1e-5;
    int threads = 1;
};

// Maximizes critical_objective over a in (0, 1) for one layout.
SearchResult find_critical_a(const NetworkLayout& layout, const CriticalOptions& opt = {});
SearchResult find_critical_a(int q, double cutoff, int chi = 2, const CriticalOptions& opt = {});

struct SimplexOptions {
    double tol = 1e-8;  // spread of the simplex values
    int maxEvaluations = 5000;
    double step = 0.05;
};

// Nelder-Mead minimization of f; history holds every evaluation in order.
SearchResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                         std::vector<double> init, const SimplexOptions& opt = {});

double mmera_energy(const NetworkLayout& layout, const Params& p);

// (a, b, c) with d = f = a, e = c; central tensor at (a0, b0)
SearchResult optimize_mmera(int layers, std::vector<double> init = {0.6, 0.5, 0.2},
                            const SimplexOptions& opt = {});
// (a, b, c, d, e, f)
SearchResult optimize_mmera_full(int layers, std::vector<double> init,
                                 const SimplexOptions& opt = {});

// iteration,<names...>,objective
void write_history_csv(std::ostream& os, const SearchResult& r);

} // namespace mgnet
