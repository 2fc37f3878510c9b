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

#include <mgnet/mgnet.h>

#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

TEST(CApi, Lifecycle) {
    mgnet_layout* lay = nullptr;
    ASSERT_EQ(mgnet_layout_regular(6, 3.0, 2, MGNET_ANTIPERIODIC, &lay), MGNET_OK);
    int tiles = 0;
    long sites = 0;
    ASSERT_EQ(mgnet_layout_info(lay, &tiles, &sites), MGNET_OK);
    EXPECT_GT(tiles, 1);
    char* names = nullptr;
    ASSERT_EQ(mgnet_layout_parameter_names(lay, &names), MGNET_OK);
    EXPECT_NE(std::string(names).find('a'), std::string::npos);
    mgnet_free_string(names);

    const char* pn[] = {"a"};
    const double pv[] = {0.58};
    mgnet_state* st = nullptr;
    ASSERT_EQ(mgnet_execute(lay, 1, pn, pv, &st), MGNET_OK);
    long n = 0;
    double logz = 0, f = 0;
    int cov = -1;
    ASSERT_EQ(mgnet_state_info(st, &n, &logz, &cov, &f), MGNET_OK);
    EXPECT_EQ(n, 2 * sites);
    EXPECT_GT(f, 0.0);
    double purity = 1, parity = 1, e = 0;
    ASSERT_EQ(mgnet_invariants(st, &purity, &parity), MGNET_OK);
    EXPECT_LT(purity, 1e-10);
    EXPECT_LT(parity, 1e-12);
    ASSERT_EQ(mgnet_energy_density(st, &e), MGNET_OK);
    EXPECT_LT(e, 0.0);
    std::vector<double> prof(5);
    ASSERT_EQ(mgnet_entropy_profile(st, 5, 2, prof.data()), MGNET_OK);
    EXPECT_GT(prof[0], 0.0);

    mgnet_report* rep = nullptr;
    ASSERT_EQ(mgnet_conformal_report(st, 1, 3, 1, 0, &rep), MGNET_OK);
    double c = 0;
    EXPECT_EQ(mgnet_report_get(rep, "central_charge", &c), MGNET_OK);
    EXPECT_EQ(mgnet_report_get(rep, "no_such_key", &c), MGNET_E_ARGUMENT);
    mgnet_report_free(rep);
    mgnet_state_free(st);
    mgnet_layout_free(lay);
}

TEST(CApi, ErrorCodes) {
    mgnet_layout* lay = nullptr;
    EXPECT_EQ(mgnet_layout_regular(5, 0.5, 2, MGNET_ANTIPERIODIC, &lay), MGNET_E_GEOMETRY);
    EXPECT_EQ(lay, nullptr);
    EXPECT_NE(std::string(mgnet_last_error()).find("q"), std::string::npos);
    EXPECT_EQ(mgnet_layout_regular(6, 1.0, 3, MGNET_ANTIPERIODIC, &lay), MGNET_E_VALIDATION);
    EXPECT_EQ(mgnet_layout_info(nullptr, nullptr, nullptr), MGNET_E_ARGUMENT);
    EXPECT_STREQ(mgnet_status_name(MGNET_E_SINGULAR), "singular");
    const double bad[] = {0, 1, 1, 0};
    mgnet_state* st = nullptr;
    EXPECT_EQ(mgnet_state_from_covariance(bad, 2, &st), MGNET_E_VALIDATION);
}

TEST(CApi, StateFromCovariance) {
    const double g[] = {0, -1, 1, 0};
    mgnet_state* st = nullptr;
    ASSERT_EQ(mgnet_state_from_covariance(g, 2, &st), MGNET_OK);
    double e = 0;
    ASSERT_EQ(mgnet_energy_density(st, &e), MGNET_OK);
    // two Majoranas: the ring term Gamma_{0,1} is counted twice
    EXPECT_NEAR(e, -1.0, 1e-15);
    std::vector<double> back(4);
    ASSERT_EQ(mgnet_state_covariance(st, back.data(), 4), MGNET_OK);
    EXPECT_EQ(back[1], -1.0);
    mgnet_state_free(st);
}

TEST(CApi, Fits) {
    std::vector<double> x, y;
    for (int d = 1; d <= 30; ++d) {
        x.push_back(d);
        y.push_back(2 * std::pow(d, -0.5));
    }
    double slope = 0, icept = 0;
    ASSERT_EQ(mgnet_fit_power_law(x.data(), y.data(), 30, 2, 20, &slope, &icept), MGNET_OK);
    EXPECT_NEAR(slope, -0.5, 1e-12);
    EXPECT_NEAR(icept, std::log(2.0), 1e-12);
}

TEST(CApi, VerifySuitePasses) {
    char* table = nullptr;
    int failures = -1;
    ASSERT_EQ(mgnet_verify(20260101, &table, &failures), MGNET_OK);
    EXPECT_EQ(failures, 0) << table;
    mgnet_free_string(table);
}

TEST(CApi, MmeraSearch) {
    const double init[] = {0.6, 0.5, 0.2};
    mgnet_search* s = nullptr;
    ASSERT_EQ(mgnet_optimize_mmera(1, init, 0, 1e-8, 2000, &s), MGNET_OK);
    int np = 0, ev = 0, conv = 0, flag = 0;
    double obj = 0;
    ASSERT_EQ(mgnet_search_info(s, &np, &obj, &ev, &conv, &flag), MGNET_OK);
    EXPECT_EQ(np, 3);
    const char* name = nullptr;
    double v = 0;
    ASSERT_EQ(mgnet_search_param(s, 1, &name, &v), MGNET_OK);
    EXPECT_STREQ(name, "b");
    EXPECT_EQ(mgnet_search_param(s, 3, &name, &v), MGNET_E_ARGUMENT);
    char* csv = nullptr;
    ASSERT_EQ(mgnet_search_history_csv(s, &csv), MGNET_OK);
    EXPECT_EQ(std::string(csv).rfind("iteration,a,b,c,objective", 0), 0u);
    mgnet_free_string(csv);
    mgnet_search_free(s);
}
