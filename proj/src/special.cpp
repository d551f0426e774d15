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

#include "macroreal/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace macroreal {

namespace {

constexpr int64_t kLogFactorialTableSize = 1 << 15;

const std::vector<double> &log_factorial_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t(kLogFactorialTableSize);
        t[0] = 0.0;
        for (int64_t n = 1; n < kLogFactorialTableSize; n++) {
            t[n] = t[n - 1] + std::log(static_cast<double>(n));
        }
        return t;
    }();
    return table;
}

bool valid_pair(HalfInt j, HalfInt m) {
    return j.twice >= 0 && std::abs(m.twice) <= j.twice && (j.twice + m.twice) % 2 == 0;
}

// Twice-value sums that are known to be even, halved.
int half(int twice) {
    return twice / 2;
}

}  // namespace

HalfInt HalfInt::from_double(double x) {
    double t = 2.0 * x;
    double r = std::round(t);
    if (!std::isfinite(x) || std::abs(t - r) > 1e-9) {
        throw std::invalid_argument("not a half-integer: " + std::to_string(x));
    }
    return HalfInt(static_cast<int>(r));
}

double log_factorial(int64_t n) {
    if (n < 0) {
        throw std::domain_error("log_factorial of negative argument");
    }
    if (n < kLogFactorialTableSize) {
        return log_factorial_table()[n];
    }
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(int64_t n, int64_t k) {
    if (k < 0 || k > n) {
        return -std::numeric_limits<double>::infinity();
    }
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
    if (!valid_pair(j1, m1) || !valid_pair(j2, m2) || !valid_pair(j3, m3)) {
        return 0.0;
    }
    if (m1.twice + m2.twice + m3.twice != 0) {
        return 0.0;
    }
    if ((j1.twice + j2.twice + j3.twice) % 2 != 0) {
        return 0.0;
    }
    if (j3.twice > j1.twice + j2.twice || j3.twice < std::abs(j1.twice - j2.twice)) {
        return 0.0;
    }

    int a = half(j1.twice + j2.twice - j3.twice);
    int b = half(j1.twice - j2.twice + j3.twice);
    int c = half(-j1.twice + j2.twice + j3.twice);
    int s = half(j1.twice + j2.twice + j3.twice);
    double log_delta = log_factorial(a) + log_factorial(b) + log_factorial(c) - log_factorial(s + 1);
    double log_m = log_factorial(half(j1.twice + m1.twice)) + log_factorial(half(j1.twice - m1.twice)) +
                   log_factorial(half(j2.twice + m2.twice)) + log_factorial(half(j2.twice - m2.twice)) +
                   log_factorial(half(j3.twice + m3.twice)) + log_factorial(half(j3.twice - m3.twice));

    int t1 = half(j3.twice - j2.twice + m1.twice);
    int t2 = half(j3.twice - j1.twice - m2.twice);
    int t3 = half(j1.twice + j2.twice - j3.twice);
    int t4 = half(j1.twice - m1.twice);
    int t5 = half(j2.twice + m2.twice);
    int kmin = std::max({0, -t1, -t2});
    int kmax = std::min({t3, t4, t5});
    if (kmin > kmax) {
        return 0.0;
    }

    std::vector<double> logs;
    logs.reserve(kmax - kmin + 1);
    double biggest = -std::numeric_limits<double>::infinity();
    for (int k = kmin; k <= kmax; k++) {
        double l = -(log_factorial(k) + log_factorial(t1 + k) + log_factorial(t2 + k) + log_factorial(t3 - k) +
                     log_factorial(t4 - k) + log_factorial(t5 - k));
        logs.push_back(l);
        biggest = std::max(biggest, l);
    }
    double sum = 0.0;
    for (int k = kmin; k <= kmax; k++) {
        double term = std::exp(logs[k - kmin] - biggest);
        sum += (k % 2 == 0) ? term : -term;
    }
    int phase = half(j1.twice - j2.twice - m3.twice);
    double sign = (phase % 2 == 0) ? 1.0 : -1.0;
    return sign * sum * std::exp(biggest + 0.5 * (log_delta + log_m));
}

double wigner_3j(double j1, double j2, double j3, double m1, double m2, double m3) {
    return wigner_3j(
        HalfInt::from_double(j1),
        HalfInt::from_double(j2),
        HalfInt::from_double(j3),
        HalfInt::from_double(m1),
        HalfInt::from_double(m2),
        HalfInt::from_double(m3));
}

namespace {

double beta_continued_fraction(double a, double b, double x) {
    constexpr int kMaxIterations = 100000;
    constexpr double kEps = 1e-15;
    constexpr double kTiny = 1e-300;
    double qab = a + b;
    double qap = a + 1.0;
    double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) {
        d = kTiny;
    }
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIterations; m++) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) {
            d = kTiny;
        }
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) {
            c = kTiny;
        }
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) {
            d = kTiny;
        }
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) {
            c = kTiny;
        }
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) {
            return h;
        }
    }
    throw std::runtime_error("incomplete_beta: continued fraction did not converge");
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (!(a > 0) || !(b > 0)) {
        throw std::domain_error("incomplete_beta requires a, b > 0");
    }
    if (x <= 0.0) {
        return 0.0;
    }
    if (x >= 1.0) {
        return 1.0;
    }
    double log_front =
        std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_continued_fraction(a, b, x) / a;
    }
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double hypergeom_2f1(double a, double b, double c, double x) {
    if (!(std::abs(x) < 1.0)) {
        throw std::domain_error("hypergeom_2f1: series requires |x| < 1");
    }
    if (c <= 0 && c == std::floor(c)) {
        throw std::domain_error("hypergeom_2f1: c is a nonpositive integer");
    }
    double term = 1.0;
    double sum = 1.0;
    for (int n = 0; n < 1000000; n++) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x;
        sum += term;
        if (term == 0.0) {
            return sum;
        }
        // Remaining tail is bounded by a geometric series once the ratio settles.
        double ratio = std::abs((a + n + 1) * (b + n + 1) / ((c + n + 1) * (n + 2.0)) * x);
        if (ratio < 1.0 && std::abs(term) * ratio / (1.0 - ratio) < 1e-16 * std::abs(sum)) {
            return sum;
        }
    }
    throw std::runtime_error("hypergeom_2f1: series did not converge");
}

double binomial_real(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; i++) {
        r *= (x - i) / (i + 1.0);
    }
    return r;
}

double sin_ratio(double n, double x) {
    double k = std::round(x / std::numbers::pi);
    double delta = x - k * std::numbers::pi;
    bool integer_n = n == std::round(n);
    if (std::abs(std::sin(x)) < 1e-8 && (k == 0 || integer_n)) {
        double n2 = n * n;
        double d2 = delta * delta;
        double series = 1.0 - (n2 - 1.0) * d2 / 6.0 + (n2 - 1.0) * (3.0 * n2 - 7.0) * d2 * d2 / 360.0;
        long long parity = static_cast<long long>(std::llabs(static_cast<long long>(k)) * static_cast<long long>(n - 1));
        return (parity % 2 == 0) ? series : -series;
    }
    return std::sin(n * x) / (n * std::sin(x));
}

double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

GaussLegendre gauss_legendre(int order) {
    if (order < 1) {
        throw std::invalid_argument("gauss_legendre order must be positive");
    }
    GaussLegendre g;
    g.nodes.resize(order);
    g.weights.resize(order);
    int half_count = (order + 1) / 2;
    for (int i = 0; i < half_count; i++) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; iter++) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int k = 1; k <= order; k++) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
            }
            dp = order * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-15) {
                break;
            }
        }
        double p0 = 1.0;
        double p1 = 0.0;
        for (int k = 1; k <= order; k++) {
            double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
        }
        dp = order * (z * p0 - p1) / (z * z - 1.0);
        double w = 2.0 / ((1.0 - z * z) * dp * dp);
        g.nodes[i] = -z;
        g.nodes[order - 1 - i] = z;
        g.weights[i] = w;
        g.weights[order - 1 - i] = w;
    }
    return g;
}

std::vector<double> normalized_legendre_table(int lmax, double theta) {
    std::vector<double> t((lmax + 1) * (lmax + 2) / 2, 0.0);
    auto idx = [](int l, int m) {
        return l * (l + 1) / 2 + m;
    };
    double x = std::cos(theta);
    double s = std::sin(theta);
    t[0] = std::sqrt(1.0 / (4.0 * std::numbers::pi));
    for (int m = 1; m <= lmax; m++) {
        t[idx(m, m)] = -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s * t[idx(m - 1, m - 1)];
    }
    for (int m = 0; m < lmax; m++) {
        t[idx(m + 1, m)] = std::sqrt(2.0 * m + 3.0) * x * t[idx(m, m)];
    }
    for (int m = 0; m <= lmax; m++) {
        for (int l = m + 2; l <= lmax; l++) {
            double l2 = static_cast<double>(l) * l;
            double m2 = static_cast<double>(m) * m;
            double a = std::sqrt((4.0 * l2 - 1.0) / (l2 - m2));
            double lm1 = l - 1.0;
            double b = std::sqrt((lm1 * lm1 - m2) / (4.0 * lm1 * lm1 - 1.0));
            t[idx(l, m)] = a * (x * t[idx(l - 1, m)] - b * t[idx(l - 2, m)]);
        }
    }
    return t;
}

ComplexPair spherical_harmonic(int l, int m, double theta, double phi) {
    if (l < 0 || std::abs(m) > l) {
        throw std::invalid_argument("spherical_harmonic: need |m| <= l");
    }
    auto table = normalized_legendre_table(l, theta);
    int am = std::abs(m);
    double p = table[l * (l + 1) / 2 + am];
    double re = p * std::cos(am * phi);
    double im = p * std::sin(am * phi);
    if (m < 0) {
        double sign = (am % 2 == 0) ? 1.0 : -1.0;
        re *= sign;
        im *= -sign;
    }
    return {re, im};
}

}  // namespace macroreal
