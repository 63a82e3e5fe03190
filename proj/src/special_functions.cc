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

#include "gkprep/special_functions.h"

#include <cmath>
#include <numbers>
#include <string>

#include "gkprep/errors.h"

namespace gkprep {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char *name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw InvalidParameter(std::string(name) + " must be positive and finite, got " + std::to_string(v));
    }
}

[[noreturn]] void truncation_failure(const char *what) {
    throw SeriesTruncationError(std::string(what) + ": no convergence within " + std::to_string(kSeriesTermCap) +
                                " terms");
}

double gaussian_density(double u, double sigma) {
    return std::exp(-0.5 * (u / sigma) * (u / sigma)) / (sigma * std::sqrt(2.0 * kPi));
}

// Stirling series remainder: lgamma(x) - [(x - 1/2) ln x - x + ln(2 pi)/2].
double stirling_error(double x) {
    constexpr double s0 = 1.0 / 12.0;
    constexpr double s1 = 1.0 / 360.0;
    constexpr double s2 = 1.0 / 1260.0;
    constexpr double s3 = 1.0 / 1680.0;
    constexpr double s4 = 1.0 / 1188.0;
    if (x <= 15.0) {
        return std::lgamma(x) - (x - 0.5) * std::log(x) + x - 0.5 * std::log(2.0 * kPi);
    }
    const double xx = x * x;
    if (x > 500.0) return (s0 - s1 / xx) / x;
    if (x > 80.0) return (s0 - (s1 - s2 / xx) / xx) / x;
    if (x > 35.0) return (s0 - (s1 - (s2 - s3 / xx) / xx) / xx) / x;
    return (s0 - (s1 - (s2 - (s3 - s4 / xx) / xx) / xx) / xx) / x;
}

// Deviance term x ln(x / m) + m - x, accurate when x is close to m.
double deviance(double x, double m) {
    if (std::abs(x - m) < 0.1 * (x + m)) {
        double v = (x - m) / (x + m);
        double s = (x - m) * v;
        double ej = 2.0 * x * v;
        v *= v;
        for (int j = 1; j < 1000; ++j) {
            ej *= v;
            const double next = s + ej / (2 * j + 1);
            if (next == s) return next;
            s = next;
        }
        return s;
    }
    return x * std::log(x / m) + m - x;
}

// ln[x^a (1-x)^b / B(a, b)] without forming the huge lgamma values directly.
double log_beta_prefactor(double x, double a, double b) {
    const double total = a + b;
    return -deviance(a, x * total) - deviance(b, (1.0 - x) * total) + 0.5 * std::log(a * b / total) -
           0.5 * std::log(2.0 * kPi) - stirling_error(a) - stirling_error(b) + stirling_error(total);
}

// Modified Lentz evaluation of the incomplete beta continued fraction.
double beta_continued_fraction(double x, double a, double b) {
    constexpr double tiny = 1e-300;
    constexpr double eps = 4.0 * 2.220446049250313e-16;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (std::size_t m = 1; m <= kSeriesTermCap; ++m) {
        const double md = static_cast<double>(m);
        const double m2 = 2.0 * md;
        double aa = md * (b - md) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + md) * (qab + md) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) <= eps) return h;
    }
    truncation_failure("incomplete beta continued fraction");
}

}  // namespace

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double std_normal_sf(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double jacobi_theta3(double z, double tau_im) {
    if (!(tau_im > 0.0)) {
        throw InvalidParameter("jacobi_theta3: tau_im must be positive, got " + std::to_string(tau_im));
    }
    double sum = 1.0;
    for (std::size_t m = 1; m <= kSeriesTermCap; ++m) {
        const double md = static_cast<double>(m);
        const double envelope = 2.0 * std::exp(-kPi * tau_im * md * md);
        if (envelope <= kSeriesRelativeCutoff * std::abs(sum)) return sum;
        sum += envelope * std::cos(2.0 * kPi * md * z);
    }
    truncation_failure("jacobi_theta3");
}

WrappedGaussian::WrappedGaussian(double sigma, double period) : sigma_(sigma), period_(period) {
    require_positive(sigma, "sigma");
    require_positive(period, "period");
}

double WrappedGaussian::reduce(double u) const {
    double r = u - period_ * std::floor(u / period_ + 0.5);
    if (r >= 0.5 * period_) r -= period_;
    if (r < -0.5 * period_) r += period_;
    return r;
}

double WrappedGaussian::pdf(double u) const {
    return sigma_ / period_ > 0.5 ? pdf_theta(u) : pdf_comb(u);
}

double WrappedGaussian::pdf_comb(double u) const {
    u = reduce(u);
    double sum = gaussian_density(u, sigma_);
    for (std::size_t k = 1; k <= kSeriesTermCap; ++k) {
        const double shift = static_cast<double>(k) * period_;
        const double term = gaussian_density(u + shift, sigma_) + gaussian_density(u - shift, sigma_);
        sum += term;
        if (term <= kSeriesRelativeCutoff * sum) return sum;
    }
    truncation_failure("wrapped Gaussian comb");
}

double WrappedGaussian::pdf_theta(double u) const {
    u = reduce(u);
    const double tau = 2.0 * kPi * sigma_ * sigma_ / (period_ * period_);
    return jacobi_theta3(u / period_, tau) / period_;
}

double WrappedGaussian::central_bin_mass() const {
    const double t = period_;
    const auto bins = static_cast<long>(std::ceil(8.0 * sigma_ / t)) + 2;
    // k = 0 bin is symmetric about the origin.
    double mass = std::erf(t / (4.0 * sigma_ * std::numbers::sqrt2));
    double shifted = 0.0;
    for (long k = 1; k <= bins; ++k) {
        const double centre = static_cast<double>(k) * t;
        shifted += std_normal_sf((centre - t / 4.0) / sigma_) - std_normal_sf((centre + t / 4.0) / sigma_);
    }
    return mass + 2.0 * shifted;
}

double WrappedGaussian::outer_bin_mass() const {
    const double t = period_;
    const auto bins = static_cast<long>(std::ceil(8.0 * sigma_ / t)) + 2;
    double mass = 0.0;
    for (long k = 0; k <= bins; ++k) {
        const double centre = (static_cast<double>(k) + 0.5) * t;
        mass += std_normal_sf((centre - t / 4.0) / sigma_) - std_normal_sf((centre + t / 4.0) / sigma_);
    }
    return 2.0 * mass;
}

double wrapped_pdf(double u, double sigma, double period) { return WrappedGaussian(sigma, period).pdf(u); }

double central_bin_mass(double sigma, double period) { return WrappedGaussian(sigma, period).central_bin_mass(); }

double outer_bin_mass(double sigma, double period) { return WrappedGaussian(sigma, period).outer_bin_mass(); }

IncompleteBeta reg_incomplete_beta_pair(double x, double a, double b) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw InvalidParameter("incomplete beta: x must lie in [0, 1], got " + std::to_string(x));
    }
    require_positive(a, "incomplete beta: a");
    require_positive(b, "incomplete beta: b");
    if (x == 0.0) return {0.0, 1.0};
    if (x == 1.0) return {1.0, 0.0};

    const double front = std::exp(log_beta_prefactor(x, a, b));
    if (x < (a + 1.0) / (a + b + 2.0)) {
        const double value = front * beta_continued_fraction(x, a, b) / a;
        return {value, 1.0 - value};
    }
    const double complement = front * beta_continued_fraction(1.0 - x, b, a) / b;
    return {1.0 - complement, complement};
}

double reg_incomplete_beta(double x, double a, double b) { return reg_incomplete_beta_pair(x, a, b).value; }

}  // namespace gkprep
