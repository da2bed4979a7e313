#include "falva/special.hpp"

#include "falva/error.hpp"

#include <cmath>

namespace falva {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Lanczos g = 7, 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_gamma(double x) {
    if (x < 0.5) {
        // reflection keeps the approximation in its accurate half-plane
        return kPi / (std::sin(kPi * x) * lanczos_gamma(1.0 - x));
    }
    x -= 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x + i);
    double t = x + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

} // namespace

double gamma_fn(double x) {
    if (!(x > 0.0)) throw DomainError("gamma_fn requires a positive argument");
    return lanczos_gamma(x);
}

double falling_product(int i, double alpha, int start) {
    if (start != 1 && start != 2) throw ConfigError("falling_product: start must be 1 or 2");
    if (i < start - 1) throw ConfigError("falling_product: i must be >= start - 1");
    double acc = 1.0;
    for (int p = start; p <= i; ++p) acc *= (p - alpha);
    return acc;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double acc = 1.0;
    for (int j = 1; j <= k; ++j) acc = acc * (n - k + j) / j;
    return acc;
}

} // namespace falva
