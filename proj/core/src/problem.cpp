#include "falva/problem.hpp"

#include "falva/error.hpp"

namespace falva {

const char* gauge_kind_name(GaugeKind g) {
    switch (g) {
    case GaugeKind::Symbolic: return "symbolic";
    case GaugeKind::Rate: return "rate";
    case GaugeKind::ForceRate: return "force_rate";
    }
    return "?";
}

void LagrangianProblem::validate() const {
    if (m < 1) throw SchemaError("m", "must be >= 1");
    if (n < 1) throw SchemaError("n", "must be >= 1");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw SchemaError("alpha", "out of (0,1]");
    if (!(t > a)) throw SchemaError("t", "observer time must exceed the left endpoint a");
    for (const auto& [name, value] : params) {
        (void)value;
        if (name == "theta" || name == "t" || name == "alpha")
            throw SchemaError("params." + name, "collides with a reserved identifier");
    }
    for (const auto& s : free_symbols(lagrangian)) {
        if (s.kind() == SymbolKind::Param && !params.count(s.name()))
            throw SchemaError("lagrangian", "unbound parameter " + s.name());
        if (!s.is_state()) continue;
        if (s.component() < 0 || s.component() >= n)
            throw SchemaError("lagrangian", "state component out of range: " + s.to_string());
        if (s.order() > m)
            throw SchemaError("lagrangian", "state order above m: " + s.to_string());
    }
}

std::map<SymbolId, Expr> LagrangianProblem::binding() const {
    std::map<SymbolId, Expr> map;
    map.emplace(SymbolId::alpha(), Expr::constant(alpha));
    map.emplace(SymbolId::observer_time(), Expr::constant(t));
    for (const auto& [name, value] : params)
        map.emplace(SymbolId::param(name), Expr::constant(value));
    return map;
}

GeneratorSet GeneratorSet::null_symmetry(int n) {
    GeneratorSet gen;
    gen.tau = Expr::constant(0.0);
    gen.xi.assign(n, Expr::constant(0.0));
    gen.gauge = GaugeKind::Rate;
    gen.gauge_expr = Expr::constant(0.0);
    return gen;
}

namespace {

void check_point_generator(const Expr& e, const LagrangianProblem& p, const std::string& where) {
    for (const auto& s : free_symbols(e)) {
        switch (s.kind()) {
        case SymbolKind::IntrinsicTime:
            break;
        case SymbolKind::State:
            if (s.component() < 0 || s.component() >= p.n)
                throw SchemaError(where, "state component out of range: " + s.to_string());
            if (s.order() != 0)
                throw SchemaError(where, "generators are point transformations; " + s.to_string() +
                                             " carries a derivative");
            break;
        case SymbolKind::Param:
            if (!p.params.count(s.name()))
                throw SchemaError(where, "unbound parameter " + s.name());
            break;
        default:
            break; // alpha, t allowed as constants
        }
    }
}

} // namespace

void GeneratorSet::validate(const LagrangianProblem& problem) const {
    if (static_cast<int>(xi.size()) != problem.n)
        throw SchemaError("generators.xi", "needs one expression per component");
    check_point_generator(tau, problem, "generators.tau");
    for (const auto& x : xi) check_point_generator(x, problem, "generators.xi");
    if (gauge != GaugeKind::ForceRate && !gauge_expr)
        throw SchemaError("generators.gauge", "missing expression for this gauge type");
    if (gauge_expr) {
        int max_order = 2 * problem.m - 1;
        for (const auto& s : free_symbols(*gauge_expr)) {
            if (s.is_state() && s.order() > max_order)
                throw SchemaError("generators.gauge.expr",
                                  "state order above 2m-1: " + s.to_string());
            if (s.kind() == SymbolKind::Param && !problem.params.count(s.name()))
                throw SchemaError("generators.gauge.expr", "unbound parameter " + s.name());
        }
    }
}

SamplerConfig make_problem_sampler(const LagrangianProblem& problem, int points) {
    SamplerConfig cfg;
    cfg.points = points;
    double width = problem.t - problem.a;
    cfg.span(SymbolId::intrinsic_time(), problem.a + 0.05 * width, problem.t - 0.05 * width);
    cfg.fix(SymbolId::observer_time(), problem.t);
    cfg.fix(SymbolId::alpha(), problem.alpha);
    for (const auto& [name, value] : problem.params) cfg.fix(SymbolId::param(name), value);
    return cfg;
}

SamplerConfig make_symbolic_sampler(int points) {
    SamplerConfig cfg;
    cfg.points = points;
    return cfg;
}

} // namespace falva
