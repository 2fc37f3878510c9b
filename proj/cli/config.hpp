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

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgnet::cli {

// error that names the offending config field
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

struct ExperimentConfig {
    std::string geometry;  // regular | happy | mmera
    int q = 0;
    double cutoff = 0;
    int layers = 0;
    std::string growth;    // happy only, overrides layers
    int chi = 2;
    std::string boundary = "antiperiodic";
    std::map<std::string, double> params;
    bool irCutoff = false;
    double irRegion = 0;
    std::string irFill;
    std::vector<std::string> tasks;
    std::string outputDir = "out";
    unsigned long seed = 0;

    long dmin = 0, dmax = 0, lmin = 0, lmax = 0;  // 0: defaults

    std::vector<double> optimizeInit;
    bool optimizeFull = false;
    double optimizeTol = 1e-8;
    int optimizeMaxEvaluations = 5000;

    std::map<std::string, std::string> raw;  // as read, for the manifest

    bool has_task(const std::string& t) const;
};

const std::vector<std::string>& known_tasks();

// key = value lines; '#' comments; "[section]" prefixes following keys
std::map<std::string, std::string> parse_key_values(std::istream& in);

ExperimentConfig config_from_map(const std::map<std::string, std::string>& kv);
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

// throws ConfigError naming the first invalid field
void validate(const ExperimentConfig& c);

} // namespace mgnet::cli
