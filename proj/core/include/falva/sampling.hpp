#ifndef FALVA_SAMPLING_HPP
#define FALVA_SAMPLING_HPP

#include "falva/expr.hpp"

#include <cstdint>
#include <map>
#include <utility>

namespace falva {

// Uniform sampling box for the free symbols of an expression. Symbols
// without an explicit range get a default by kind, chosen so that the
// fractional weight stays away from the theta = t singularity.
struct SamplerConfig {
    struct Range {
        double lo;
        double hi;
    };

    int points = 100;
    std::uint64_t seed = 0x5eedf01dULL;
    std::map<SymbolId, Range> ranges;

    Range range_for(const SymbolId& id) const;

    SamplerConfig& fix(const SymbolId& id, double value) {
        ranges[id] = {value, value};
        return *this;
    }
    SamplerConfig& span(const SymbolId& id, double lo, double hi) {
        ranges[id] = {lo, hi};
        return *this;
    }
};

struct SampleStats {
    double max_abs = 0.0;
    int evaluated = 0;
    int rejected = 0;
};

// Largest |e| over the sampled points. Throws ConfigError if more than
// half of the samples reject (eval errors or non-finite values).
SampleStats sample_max_abs(const Expr& e, const SamplerConfig& cfg);

// True iff |e1 - e2| <= tol * (1 + max(|e1|, |e2|)) at every accepted
// sample point. Rejections above 50% raise ConfigError.
bool numerically_equivalent(const Expr& e1, const Expr& e2, const SamplerConfig& cfg, double tol);

// Decompose e = A*s + b. A is the partial derivative, b the value at
// s = 0. Affinity is verified by sampling the second derivative; failure
// raises NonlinearInSymbolError.
std::pair<Expr, Expr> linear_coeffs_in(const Expr& e, const SymbolId& s, double tol = 1e-9,
                                       const SamplerConfig* cfg = nullptr);

} // namespace falva

#endif
