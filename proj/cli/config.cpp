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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace mgnet::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ','))
        if (!trim(item).empty())
            out.push_back(trim(item));
    return out;
}

double to_real(const std::string& key, const std::string& v) {
    try {
        size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size() || !std::isfinite(x))
            throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError(key, "expected a real number, got '" + v + "'");
    }
}

long to_integer(const std::string& key, const std::string& v) {
    try {
        size_t used = 0;
        const long x = std::stol(v, &used);
        if (used != v.size())
            throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError(key, "expected an integer, got '" + v + "'");
    }
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes")
        return true;
    if (v == "false" || v == "0" || v == "no")
        return false;
    throw ConfigError(key, "expected true or false, got '" + v + "'");
}

const std::map<std::string, std::vector<std::string>>& accepted_params() {
    static const std::map<std::string, std::vector<std::string>> m = {
        {"regular", {"a", "a12", "a13", "a23"}},
        {"happy", {}},
        {"mmera", {"a", "b", "c", "d", "e", "f", "a0", "b0"}},
    };
    return m;
}

} // namespace

bool ExperimentConfig::has_task(const std::string& t) const {
    return std::find(tasks.begin(), tasks.end(), t) != tasks.end();
}

const std::vector<std::string>& known_tasks() {
    static const std::vector<std::string> t = {"criticalSearch", "mmeraOptimize", "covariance",
                                               "correlators",    "entropyProfile", "pairFrequency",
                                               "conformalReport"};
    return t;
}

std::map<std::string, std::string> parse_key_values(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno), "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno), "expected key = value");
        std::string key = trim(line.substr(0, eq));
        if (key.empty())
            throw ConfigError("line " + std::to_string(lineno), "empty key");
        if (!section.empty())
            key = section + "." + key;
        if (kv.count(key))
            throw ConfigError(key, "duplicate key");
        kv[key] = trim(line.substr(eq + 1));
    }
    return kv;
}

ExperimentConfig config_from_map(const std::map<std::string, std::string>& kv) {
    ExperimentConfig c;
    c.raw = kv;
    for (const auto& [k, v] : kv) {
        if (k == "geometry.kind")
            c.geometry = v;
        else if (k == "geometry.q")
            c.q = int(to_integer(k, v));
        else if (k == "geometry.cutoff")
            c.cutoff = to_real(k, v);
        else if (k == "geometry.layers")
            c.layers = int(to_integer(k, v));
        else if (k == "geometry.growth")
            c.growth = v;
        else if (k == "chi")
            c.chi = int(to_integer(k, v));
        else if (k == "boundary")
            c.boundary = v;
        else if (k.rfind("params.", 0) == 0)
            c.params[k.substr(7)] = to_real(k, v);
        else if (k == "ir.region") {
            c.irCutoff = true;
            c.irRegion = to_real(k, v);
        } else if (k == "ir.fill")
            c.irFill = v;
        else if (k == "tasks")
            c.tasks = split_list(v);
        else if (k == "output.dir")
            c.outputDir = v;
        else if (k == "seed") {
            const long s = to_integer(k, v);
            if (s < 0)
                throw ConfigError(k, "must be non-negative");
            c.seed = (unsigned long)s;
        } else if (k == "fit.dmin")
            c.dmin = to_integer(k, v);
        else if (k == "fit.dmax")
            c.dmax = to_integer(k, v);
        else if (k == "fit.lmin")
            c.lmin = to_integer(k, v);
        else if (k == "fit.lmax")
            c.lmax = to_integer(k, v);
        else if (k == "optimize.init") {
            for (const auto& s : split_list(v))
                c.optimizeInit.push_back(to_real(k, s));
        } else if (k == "optimize.full")
            c.optimizeFull = to_bool(k, v);
        else if (k == "optimize.tol")
            c.optimizeTol = to_real(k, v);
        else if (k == "optimize.max_evaluations")
            c.optimizeMaxEvaluations = int(to_integer(k, v));
        else
            throw ConfigError(k, "unknown key");
    }
    return c;
}

ExperimentConfig parse_config(std::istream& in) { return config_from_map(parse_key_values(in)); }

ExperimentConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw ConfigError("config", "cannot open '" + path + "'");
    return parse_config(f);
}

void validate(const ExperimentConfig& c) {
    const auto& acc = accepted_params();
    if (!acc.count(c.geometry))
        throw ConfigError("geometry.kind", "must be regular, happy or mmera");
    if (c.geometry == "regular") {
        if (c.q < 6)
            throw ConfigError("geometry.q", "must be at least 6");
        if (!(c.cutoff > 0))
            throw ConfigError("geometry.cutoff", "must be positive");
        if (c.q > 6 && !(c.cutoff < 1))
            throw ConfigError("geometry.cutoff", "hyperbolic cutoff is a disk radius below 1");
    } else if (c.geometry == "happy") {
        if (c.growth.empty() && c.layers < 1)
            throw ConfigError("geometry.layers", "must be at least 1");
        if (c.growth.find_first_not_of("ev") != std::string::npos)
            throw ConfigError("geometry.growth", "only the letters e and v are allowed");
    } else if (c.layers < 1) {
        throw ConfigError("geometry.layers", "must be at least 1");
    }
    if (c.chi < 2 || (c.chi & (c.chi - 1)))
        throw ConfigError("chi", "must be a power of two");
    if (c.chi != 2 && c.geometry != "regular")
        throw ConfigError("chi", "only regular tilings take chi > 2");
    if (c.boundary != "antiperiodic" && c.boundary != "periodic")
        throw ConfigError("boundary", "must be antiperiodic or periodic");
    if (c.boundary == "periodic" && c.geometry == "happy")
        throw ConfigError("boundary", "the HaPPY network has no parameters to make periodic");

    const auto& names = acc.at(c.geometry);
    for (const auto& [k, v] : c.params)
        if (std::find(names.begin(), names.end(), k) == names.end())
            throw ConfigError("params." + k, "not a parameter of geometry " + c.geometry);
    const bool searched = c.has_task("criticalSearch") || c.has_task("mmeraOptimize");
    if (c.geometry == "regular" && !searched && !c.params.count("a") &&
        !(c.params.count("a12") && c.params.count("a13") && c.params.count("a23")))
        throw ConfigError("params.a", "required (or all of a12, a13, a23)");
    if (c.geometry == "mmera" && !searched)
        for (const char* k : {"a", "b", "c"})
            if (!c.params.count(k))
                throw ConfigError(std::string("params.") + k, "required");

    if (c.irCutoff) {
        if (!(c.irRegion > 0))
            throw ConfigError("ir.region", "must be positive");
        if (c.irFill != "zero" && c.irFill != "one")
            throw ConfigError("ir.fill", "must be zero or one");
    } else if (!c.irFill.empty()) {
        throw ConfigError("ir.region", "required when ir.fill is set");
    }

    if (c.tasks.empty())
        throw ConfigError("tasks", "at least one task is required");
    for (const auto& t : c.tasks)
        if (std::find(known_tasks().begin(), known_tasks().end(), t) == known_tasks().end())
            throw ConfigError("tasks", "unknown task '" + t + "'");
    if (c.has_task("criticalSearch") && c.geometry != "regular")
        throw ConfigError("tasks", "criticalSearch needs a regular tiling");
    if (c.has_task("mmeraOptimize") && c.geometry != "mmera")
        throw ConfigError("tasks", "mmeraOptimize needs the mmera geometry");
    if (c.outputDir.empty())
        throw ConfigError("output.dir", "must not be empty");

    for (const auto& [k, v] : {std::pair<const char*, long>{"fit.dmin", c.dmin},
                               {"fit.dmax", c.dmax}, {"fit.lmin", c.lmin}, {"fit.lmax", c.lmax}})
        if (v < 0)
            throw ConfigError(k, "must be non-negative");
    const size_t want = c.optimizeFull ? 6 : 3;
    if (!c.optimizeInit.empty() && c.optimizeInit.size() != want)
        throw ConfigError("optimize.init", "expected " + std::to_string(want) + " values");
    if (!(c.optimizeTol > 0))
        throw ConfigError("optimize.tol", "must be positive");
    if (c.optimizeMaxEvaluations < 1)
        throw ConfigError("optimize.max_evaluations", "must be positive");
}

} // namespace mgnet::cli
