#include "falva/sampling.hpp"

#include "falva/error.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace falva {

SamplerConfig::Range SamplerConfig::range_for(const SymbolId& id) const {
    auto it = ranges.find(id);
    if (it != ranges.end()) return it->second;
    switch (id.kind()) {
    case SymbolKind::IntrinsicTime: return {0.2, 0.8};
    case SymbolKind::ObserverTime: return {1.2, 2.0}; // keeps t - theta > 0
    case SymbolKind::Alpha: return {0.15, 0.9};
    case SymbolKind::Param: return {0.6, 1.7};
    case SymbolKind::State: return {-1.5, 1.5};
    }
    return {-1.0, 1.0};
}

namespace {

struct Sampler {
    std::vector<SymbolId> symbols;
    std::vector<SamplerConfig::Range> ranges;
    std::mt19937_64 rng;

    Sampler(const std::set<SymbolId>& syms, const SamplerConfig& cfg) : rng(cfg.seed) {
        for (const auto& s : syms) {
            symbols.push_back(s);
            auto r = cfg.range_for(s);
            if (!(r.lo <= r.hi) || !std::isfinite(r.lo) || !std::isfinite(r.hi))
                throw ConfigError("bad sampling range for " + s.to_string());
            ranges.push_back(r);
        }
    }

    Env draw() {
        Env env;
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (size_t i = 0; i < symbols.size(); ++i) {
            double u = unit(rng);
            env.set(symbols[i], ranges[i].lo + u * (ranges[i].hi - ranges[i].lo));
        }
        return env;
    }
};

} // namespace

SampleStats sample_max_abs(const Expr& e, const SamplerConfig& cfg) {
    if (cfg.points <= 0) throw ConfigError("sampler needs a positive point count");
    Sampler sampler(free_symbols(e), cfg);
    SampleStats stats;
    for (int i = 0; i < cfg.points; ++i) {
        Env env = sampler.draw();
        double v;
        try {
            v = eval(e, env);
        } catch (const Error&) {
            ++stats.rejected;
            continue;
        }
        if (!std::isfinite(v)) {
            ++stats.rejected;
            continue;
        }
        ++stats.evaluated;
        stats.max_abs = std::max(stats.max_abs, std::abs(v));
    }
    if (stats.rejected * 2 > cfg.points)
        throw ConfigError("more than half of the sample points rejected");
    return stats;
}

bool numerically_equivalent(const Expr& e1, const Expr& e2, const SamplerConfig& cfg, double tol) {
    if (cfg.points <= 0) throw ConfigError("sampler needs a positive point count");
    std::set<SymbolId> syms = free_symbols(e1);
    collect_free_symbols(e2, syms);
    Sampler sampler(syms, cfg);
    int rejected = 0;
    for (int i = 0; i < cfg.points; ++i) {
        Env env = sampler.draw();
        double v1, v2;
        try {
            v1 = eval(e1, env);
            v2 = eval(e2, env);
        } catch (const Error&) {
            ++rejected;
            continue;
        }
        if (!std::isfinite(v1) || !std::isfinite(v2)) {
            ++rejected;
            continue;
        }
        if (std::abs(v1 - v2) > tol * (1.0 + std::max(std::abs(v1), std::abs(v2)))) return false;
    }
    if (rejected * 2 > cfg.points)
        throw ConfigError("more than half of the sample points rejected");
    return true;
}

std::pair<Expr, Expr> linear_coeffs_in(const Expr& e, const SymbolId& s, double tol,
                                       const SamplerConfig* cfg) {
    Expr A = simplify(partial(e, s));
    Expr second = simplify(partial(A, s));
    if (!second.is_zero()) {
        SamplerConfig local;
        if (cfg) local = *cfg;
        local.points = std::max(local.points, 50);
        SampleStats st = sample_max_abs(second, local);
        if (st.max_abs > tol)
            throw NonlinearInSymbolError("expression is not affine in " + s.to_string());
    }
    Expr b = simplify(substitute(e, std::map<SymbolId, Expr>{{s, Expr::constant(0.0)}}));
    return {std::move(A), std::move(b)};
}

} // namespace falva
