// Copyright 2026 The macroreal Authors
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

#ifndef MACROREAL_SPECIAL_HPP
#define MACROREAL_SPECIAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace macroreal {

/// A half-integer stored as twice its value, so 3/2 is {3}.
struct HalfInt {
    int twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int twice_value) : twice(twice_value) {
    }
    /// Throws std::invalid_argument unless 2x is an integer.
    static HalfInt from_double(double x);
    static constexpr HalfInt integer(int k) {
        return HalfInt(2 * k);
    }

    constexpr double value() const {
        return 0.5 * twice;
    }
    constexpr bool is_integer() const {
        return twice % 2 == 0;
    }
    constexpr HalfInt operator-() const {
        return HalfInt(-twice);
    }
    constexpr HalfInt operator+(HalfInt o) const {
        return HalfInt(twice + o.twice);
    }
    constexpr HalfInt operator-(HalfInt o) const {
        return HalfInt(twice - o.twice);
    }
    constexpr bool operator==(const HalfInt &) const = default;
    constexpr auto operator<=>(const HalfInt &) const = default;
};

/// ln(n!) from a lazily grown table; falls back to lgamma past the table.
double log_factorial(int64_t n);

/// ln C(n, k).
double log_binomial(int64_t n, int64_t k);

/// Wigner 3j symbol (j1 j2 j3; m1 m2 m3) via the Racah sum in log space.
/// Returns 0 when the triangle or projection rules fail.
double wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);
double wigner_3j(double j1, double j2, double j3, double m1, double m2, double m3);

/// Regularized incomplete beta I_x(a, b), continued fraction (Lentz).
double incomplete_beta(double a, double b, double x);

/// Gauss hypergeometric 2F1(a, b; c; x) for |x| < 1 by power series.
double hypergeom_2f1(double a, double b, double c, double x);

/// Generalized binomial coefficient binom(x, k) for real x, integer k >= 0.
double binomial_real(double x, int k);

/// sin(n x) / (n sin x), with a Taylor expansion near multiples of pi.
double sin_ratio(double n, double x);

/// sin(x) / x.
double sinc(double x);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendre gauss_legendre(int order);

/// Fully normalized spherical harmonic Y_lm (Condon-Shortley phase).
struct ComplexPair {
    double re;
    double im;
};
ComplexPair spherical_harmonic(int l, int m, double theta, double phi);

/// Normalized associated Legendre values Ybar_l^m(theta) = Y_lm(theta, 0) for
/// all 0 <= m <= l <= lmax, packed as index l*(l+1)/2 + m.
std::vector<double> normalized_legendre_table(int lmax, double theta);

}  // namespace macroreal

#endif
