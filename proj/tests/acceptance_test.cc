// Copyright 2026 The gkprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gkprep/gkp.h"
#include "gkprep/monte_carlo.h"
#include "gkprep/optimize.h"
#include "gkprep/repetition.h"
#include "gkprep/special_functions.h"
#include "gkprep/wigner.h"

using namespace gkprep;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void check(bool ok, const char *fmt, ...) __attribute__((format(printf, 3, 4)));
};

void Outcome::check(bool ok, const char *fmt, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, ap);
    va_end(ap);
    if (!detail.empty()) detail += "; ";
    detail += buf;
    if (!ok) {
        detail += " [x]";
        pass = false;
    }
}

bool within(double value, double target, double tol) { return std::fabs(value - target) <= tol; }

Outcome quadrature_rates() {
    Outcome o;
    const auto biased = quadrature_outcomes(GkpLattice(2.0), NoiseChannel(1.0 / std::sqrt(2.0)));
    const auto square = quadrature_outcomes(GkpLattice(1.0), NoiseChannel(1.0 / std::sqrt(2.0)));
    o.check(within(biased.q.p_err(), 0.37, 0.005), "r=2 q %.5f", biased.q.p_err());
    o.check(within(biased.p.p_err(), 0.08, 0.005), "r=2 p %.5f", biased.p.p_err());
    o.check(within(square.q.p_err(), 0.21, 0.005), "r=1 q %.5f", square.q.p_err());
    o.check(within(square.p.p_err(), 0.21, 0.005), "r=1 p %.5f", square.p.p_err());
    return o;
}

Outcome db_table() {
    Outcome o;
    const double db[] = {0, 3, 6, 9};
    const double sigma[] = {0.707, 0.501, 0.354, 0.251};
    for (int i = 0; i < 4; ++i) {
        const double s = sigma_from_db(db[i]);
        o.check(within(s, sigma[i], 0.0005), "%g dB -> %.5f", db[i], s);
    }
    return o;
}

Outcome bias_optimization() {
    Outcome o;
    const auto eleven = optimize_bias(11, 0.5);
    const auto one = optimize_bias(1, 0.5);
    o.check(eleven.r_opt >= 2.45 && eleven.r_opt <= 2.65, "r_opt(11) %.4f", eleven.r_opt);
    o.check(eleven.error_rate < one.error_rate, "err(11) %.5f < err(1) %.5f", eleven.error_rate, one.error_rate);
    o.check(within(one.r_opt, 1.0, 0.01), "r_opt(1) %.4f", one.r_opt);
    return o;
}

Outcome crossovers() {
    Outcome o;
    const auto three = crossover_sigma(3);
    const auto thirty_one = crossover_sigma(31);
    o.check(three && within(*three, 0.538, 0.002), "n=3 %.5f", three.value_or(NAN));
    o.check(thirty_one && within(*thirty_one, 0.584, 0.003), "n=31 %.5f", thirty_one.value_or(NAN));
    return o;
}

Outcome threshold() {
    Outcome o;
    std::vector<double> sigmas;
    for (int i = 0; i <= 40; ++i) sigmas.push_back(0.58 + 0.001 * i);
    const auto ns = default_code_lengths();
    const auto start = std::chrono::steady_clock::now();
    const auto est = estimate_threshold(sigmas, ns, {}, 1);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.check(est.sigma && within(*est.sigma, 0.599, 0.002), "threshold %.4f over %zu lengths up to %lld",
            est.sigma.value_or(NAN), ns.size(), static_cast<long long>(ns.back()));
    o.check(seconds < 600.0, "%.1f s single worker", seconds);
    return o;
}

Outcome small_code_suppression() {
    Outcome o;
    const double nine = logical_error_rate(9, 2.4, 0.3);
    const double single = logical_error_rate(1, 1.0, 0.3);
    o.check(within(nine, 1.0e-4, 0.2e-4), "err(9, 2.4, 0.3) %.4e", nine);
    o.check(within(single / nine, 60.0, 10.0), "ratio to square single mode %.2f", single / nine);
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    const std::vector<double> ps = {0.0, 0.001, 0.01, 0.05, 0.1, 0.2, 0.3, 0.4, 0.45, 0.5,
                                    0.55, 0.6, 0.7, 0.8, 0.9, 0.99, 1.0};
    double worst_bit = 0.0;
    double worst_parity = 0.0;
    for (int n = 1; n <= 19; n += 2) {
        const RepetitionCode code(n);
        const int k = (n - 1) / 2;
        for (double p : ps) {
            // Extended-precision accumulator over up to 2^19 terms.
            long double majority = 0.0L;
            long double even = 0.0L;
            const long double pl = p;
            for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
                const int flips = __builtin_popcountl(mask);
                const long double prob = std::pow(pl, flips) * std::pow(1.0L - pl, n - flips);
                if (flips <= k) majority += prob;
                if (flips % 2 == 0) even += prob;
            }
            worst_bit = std::fmax(worst_bit, std::fabs(bitflip_success(code, p) - static_cast<double>(majority)));
            if (n <= 15) worst_parity = std::fmax(worst_parity, std::fabs(phaseflip_even(code, p) - static_cast<double>(even)));
        }
    }
    double worst_pdf = 0.0;
    const double period = 2.0;
    for (double ratio = 0.05; ratio <= 20.0 + 1e-9; ratio *= 1.25) {
        const WrappedGaussian w(ratio * period, period);
        for (double f = -0.5; f <= 0.5; f += 1.0 / 64) {
            worst_pdf = std::fmax(worst_pdf, std::fabs(w.pdf_comb(f * period) - w.pdf_theta(f * period)));
        }
    }
    o.check(worst_bit <= 1e-12, "majority vote max dev %.2e", worst_bit);
    o.check(worst_parity <= 1e-12, "parity max dev %.2e", worst_parity);
    o.check(worst_pdf <= 1e-12, "wrapped pdf max dev %.2e", worst_pdf);
    return o;
}

Outcome channel_equivalence() {
    Outcome o;
    double worst = 0.0;
    for (double r : {1.0, 2.0, 4.0, 8.0, 15.0}) {
        for (double sigma : {0.2, 0.4, 0.6}) {
            const GkpLattice lattice(r);
            const auto rect = quadrature_outcomes(lattice, NoiseChannel(sigma));
            const auto square = square_lattice_outcomes({sigma * std::sqrt(r), sigma / std::sqrt(r)});
            worst = std::fmax(worst, std::fabs(rect.q.p_err() - square.q.p_err()));
            worst = std::fmax(worst, std::fabs(rect.p.p_err() - square.p.p_err()));
        }
    }
    o.check(worst <= 1e-12, "max dev %.2e over 15 points", worst);
    return o;
}

Outcome monte_carlo() {
    Outcome o;
    const McConfig configs[] = {{1, 2.0, 0.7071, 1000000, 20260101},
                                {3, 1.0, 0.5, 1000000, 20260102},
                                {11, 2.55, 0.5, 1000000, 20260103}};
    for (const auto &config : configs) {
        const auto est = simulate_rep_code(config);
        const auto exact = logical_channel(RepetitionCode(config.n),
                                           gkp_channel(GkpLattice(config.r), NoiseChannel(config.sigma)));
        const double expected[] = {exact.p_i(), exact.p_x(), exact.p_y(), exact.p_z()};
        double worst = 0.0;
        for (int i = 0; i < 4; ++i) {
            const Pauli p = static_cast<Pauli>(i);
            const double se = std::sqrt(expected[i] * (1.0 - expected[i]) / static_cast<double>(config.trials));
            const double dev = std::fabs(est.probability(p) - expected[i]);
            worst = std::fmax(worst, se > 0.0 ? dev / se : (dev > 0.0 ? INFINITY : 0.0));
        }
        const auto again = simulate_rep_code(config, 3);
        o.check(worst <= 4.0, "(%lld, %g, %g) max %.2f SE", static_cast<long long>(config.n), config.r, config.sigma,
                worst);
        o.check(again.counts == est.counts, "same seed %s", again.counts == est.counts ? "identical" : "differs");
    }
    return o;
}

Outcome wigner_normalization() {
    Outcome o;
    const double integral = unit_cell_integral(2.0, 0.2, 400);
    o.check(within(integral, 1.0, 1e-6), "unit cell integral %.10f", integral);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
        {"quadrature rates", quadrature_rates},
        {"dB table", db_table},
        {"bias optimization", bias_optimization},
        {"crossovers", crossovers},
        {"threshold", threshold},
        {"small-code suppression", small_code_suppression},
        {"oracle equivalence", oracle_equivalence},
        {"channel equivalence", channel_equivalence},
        {"Monte Carlo validation", monte_carlo},
        {"Wigner normalization", wigner_normalization},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome o = criteria[i].second();
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2zu %-24s %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                    seconds);
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
