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

#ifndef GKPREP_SPECIAL_FUNCTIONS_H
#define GKPREP_SPECIAL_FUNCTIONS_H

#include <cstddef>

namespace gkprep {

/// Series stop once a term drops below this fraction of the running sum.
inline constexpr double kSeriesRelativeCutoff = 1e-16;
/// Hard cap on the number of terms of any series; hitting it throws
/// SeriesTruncationError.
inline constexpr std::size_t kSeriesTermCap = 10000;

/// Standard normal CDF, Phi(x).
double std_normal_cdf(double x);

/// Upper tail 1 - Phi(x), computed without cancellation for large x.
double std_normal_sf(double x);

/// Jacobi theta function of the third kind on the imaginary axis,
///   theta3(z, i*t) = 1 + 2 * sum_{m>=1} exp(-pi t m^2) cos(2 pi m z).
/// Throws InvalidParameter if tau_im <= 0.
double jacobi_theta3(double z, double tau_im);

/// Zero-mean Gaussian of width `sigma` wrapped onto [-T/2, T/2).
class WrappedGaussian {
   public:
    WrappedGaussian(double sigma, double period);

    double sigma() const { return sigma_; }
    double period() const { return period_; }

    /// Density at `u`. Arguments outside [-T/2, T/2) are first reduced by a
    /// centered modulo. Uses whichever representation needs fewer terms.
    double pdf(double u) const;
    /// Direct sum of Gaussian translates, sum_k f(u + kT).
    double pdf_comb(double u) const;
    /// Frequency-domain form (1/T) theta3(u/T, 2 pi sigma^2 / T^2).
    double pdf_theta(double u) const;

    /// Mass of the correctable bin, 2 * int_0^{T/4} pdf(u) du.
    double central_bin_mass() const;
    /// Mass of the uncorrectable bin, 2 * int_{T/4}^{T/2} pdf(u) du, summed
    /// from upper tails so that tiny values keep full relative precision.
    double outer_bin_mass() const;

    /// Reduce `u` into [-T/2, T/2).
    double reduce(double u) const;

   private:
    double sigma_;
    double period_;
};

double wrapped_pdf(double u, double sigma, double period);

/// Probability that a N(0, sigma^2) displacement lands within T/4 of an
/// even multiple of T/2, i.e. the correctable bin of the wrapped density.
double central_bin_mass(double sigma, double period);

/// 1 - central_bin_mass(sigma, period), evaluated directly.
double outer_bin_mass(double sigma, double period);

/// Regularised incomplete beta function together with its complement.
struct IncompleteBeta {
    double value;       // I_x(a, b)
    double complement;  // 1 - I_x(a, b) = I_{1-x}(b, a)
};

/// I_x(a, b) and its complement, each accurate in relative terms when small.
/// Continued fraction with a log-domain prefactor; valid for a, b up to ~1e7.
/// Throws InvalidParameter for x outside [0, 1] or a, b <= 0.
IncompleteBeta reg_incomplete_beta_pair(double x, double a, double b);

double reg_incomplete_beta(double x, double a, double b);

}  // namespace gkprep

#endif
