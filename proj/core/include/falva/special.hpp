#ifndef FALVA_SPECIAL_HPP
#define FALVA_SPECIAL_HPP

namespace falva {

// Euler gamma function for x > 0, Lanczos approximation (g = 7, 9
// coefficients). Throws DomainError for x <= 0.
double gamma_fn(double x);

// Falling product Pi_{p=start}^{i} (p - alpha); empty product is 1.
// Equals Gamma(i - alpha + 1) / Gamma(start - alpha) without evaluating
// any gamma, so alpha = 1 stays finite. start must be 1 or 2, i >= start-1.
double falling_product(int i, double alpha, int start);

// Binomial coefficient C(n, k) as a double; 0 outside the triangle.
double binomial(int n, int k);

} // namespace falva

#endif
