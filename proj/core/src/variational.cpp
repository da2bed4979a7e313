#include "falva/variational.hpp"

#include "falva/error.hpp"
#include "falva/special.hpp"

namespace falva {

namespace {

Expr dL_dstate(const LagrangianProblem& p, int component, int order) {
    return simplify(partial(p.lagrangian, SymbolId::state(component, order)));
}

Expr one_minus_alpha_over_weight() {
    return Expr::quotient(Expr::constant(1.0) - alpha_sym(), observer_t() - theta());
}

// (start - alpha)(start+1 - alpha)...(i - alpha) as an expression.
Expr falling_product_expr(int i, int start) {
    std::vector<Expr> factors;
    for (int pfac = start; pfac <= i; ++pfac)
        factors.push_back(Expr::constant(static_cast<double>(pfac)) - alpha_sym());
    if (factors.empty()) return Expr::constant(1.0);
    return Expr::product(std::move(factors));
}

Expr dot(const std::vector<Expr>& a, const std::vector<Expr>& b) {
    std::vector<Expr> terms;
    terms.reserve(a.size());
    for (size_t c = 0; c < a.size(); ++c) terms.push_back(Expr::product({a[c], b[c]}));
    return Expr::sum(std::move(terms));
}

std::vector<Expr> qdot(const LagrangianProblem& p) {
    std::vector<Expr> v;
    v.reserve(p.n);
    for (int c = 0; c < p.n; ++c) v.push_back(state(c, 1));
    return v;
}

} // namespace

std::vector<Expr> psi(const LagrangianProblem& p, int j) {
    if (j < 0 || j > p.m) throw ConfigError("psi: j must lie in [0, m]");
    std::vector<Expr> out;
    out.reserve(p.n);
    for (int c = 0; c < p.n; ++c) {
        std::vector<Expr> terms;
        for (int i = 0; i <= p.m - j; ++i) {
            Expr term = total_deriv_n(dL_dstate(p, c, i + j), i);
            if (i % 2 == 1) term = Expr::negate(std::move(term));
            terms.push_back(std::move(term));
        }
        out.push_back(simplify(Expr::sum(std::move(terms))));
    }
    return out;
}

std::vector<Expr> force_F(const LagrangianProblem& p) {
    std::vector<Expr> out;
    out.reserve(p.n);
    for (int c = 0; c < p.n; ++c) {
        // first family: (1-alpha)/(t-theta) * sum_i i (-1)^(i-1) D^(i-1) dL/dq^(i)
        std::vector<Expr> inner;
        for (int i = 1; i <= p.m; ++i) {
            Expr term = total_deriv_n(dL_dstate(p, c, i), i - 1);
            term = Expr::product({Expr::constant(static_cast<double>(i)), std::move(term)});
            if (i % 2 == 0) term = Expr::negate(std::move(term));
            inner.push_back(std::move(term));
        }
        std::vector<Expr> terms;
        Expr first = Expr::product({one_minus_alpha_over_weight(),
                                    simplify(Expr::sum(std::move(inner)))});
        if (!first.is_zero()) terms.push_back(std::move(first));

        // second family: the higher-order weight corrections
        for (int k = 2; k <= p.m; ++k) {
            for (int i = 2; i <= k; ++i) {
                Expr coeff = Expr::quotient(falling_product_expr(i, 1),
                                            Expr::int_pow(observer_t() - theta(), i));
                Expr term = Expr::product({coeff, Expr::constant(binomial(k, k - i)),
                                           total_deriv_n(dL_dstate(p, c, k), k - i)});
                if (i % 2 == 0) term = Expr::negate(std::move(term)); // sign (-1)^(i-1)
                terms.push_back(std::move(term));
            }
        }
        out.push_back(simplify(Expr::sum(std::move(terms))));
    }
    return out;
}

std::vector<Expr> euler_lagrange_residual(const LagrangianProblem& p) {
    std::vector<Expr> psi0 = psi(p, 0);
    std::vector<Expr> f = force_F(p);
    std::vector<Expr> out;
    out.reserve(p.n);
    for (int c = 0; c < p.n; ++c)
        out.push_back(simplify(psi0[c] - f[c]));
    return out;
}

Expr dubois_reymond_residual(const LagrangianProblem& p) {
    std::vector<Expr> hamiltonian_terms{p.lagrangian};
    for (int j = 1; j <= p.m; ++j) {
        std::vector<Expr> psij = psi(p, j);
        for (int c = 0; c < p.n; ++c)
            hamiltonian_terms.push_back(Expr::negate(Expr::product({psij[c], state(c, j)})));
    }
    Expr rate = total_deriv(simplify(Expr::sum(std::move(hamiltonian_terms))));
    Expr residual = rate - partial(p.lagrangian, SymbolId::intrinsic_time()) -
                    dot(force_F(p), qdot(p));
    return simplify(residual);
}

std::vector<Expr> rho(const LagrangianProblem& p, const GeneratorSet& gen, int i) {
    if (i < 0 || i > p.m) throw ConfigError("rho: i must lie in [0, m]");
    std::vector<Expr> current = gen.xi;
    for (auto& e : current) e = simplify(e);
    Expr dtau = simplify(total_deriv(gen.tau));
    for (int level = 1; level <= i; ++level) {
        std::vector<Expr> next;
        next.reserve(p.n);
        for (int c = 0; c < p.n; ++c)
            next.push_back(simplify(total_deriv(current[c]) -
                                    Expr::product({state(c, level), dtau})));
        current = std::move(next);
    }
    return current;
}

Expr resolve_gauge_rate(const LagrangianProblem& p, const GeneratorSet& gen) {
    switch (gen.gauge) {
    case GaugeKind::Symbolic:
        if (!gen.gauge_expr) throw GaugeUnresolvableError("symbolic gauge without expression");
        return simplify(total_deriv(*gen.gauge_expr));
    case GaugeKind::Rate:
        if (!gen.gauge_expr) throw GaugeUnresolvableError("rate gauge without expression");
        return simplify(*gen.gauge_expr);
    case GaugeKind::ForceRate:
        return simplify(dot(force_F(p), qdot(p)));
    }
    throw GaugeUnresolvableError("unknown gauge mode");
}

namespace {

// Shared head of both invariance forms:
//   dL/dtheta tau + sum_{i=0}^m dL/dq^(i) . rho^i
Expr invariance_head(const LagrangianProblem& p, const GeneratorSet& gen) {
    std::vector<Expr> terms;
    terms.push_back(Expr::product({partial(p.lagrangian, SymbolId::intrinsic_time()), gen.tau}));
    for (int i = 0; i <= p.m; ++i) {
        std::vector<Expr> rho_i = rho(p, gen, i);
        for (int c = 0; c < p.n; ++c)
            terms.push_back(Expr::product({dL_dstate(p, c, i), rho_i[c]}));
    }
    return Expr::sum(std::move(terms));
}

} // namespace

Expr invariance_residual(const LagrangianProblem& p, const GeneratorSet& gen) {
    Expr weight_term = Expr::product(
        {p.lagrangian,
         Expr::sum({total_deriv(gen.tau),
                    Expr::product({one_minus_alpha_over_weight(), gen.tau})})});
    return simplify(invariance_head(p, gen) + weight_term - resolve_gauge_rate(p, gen));
}

std::vector<Expr> omega(const LagrangianProblem& p, const GeneratorSet& gen) {
    std::vector<Expr> out;
    out.reserve(p.n);
    for (int c = 0; c < p.n; ++c)
        out.push_back(simplify(gen.xi[c] - Expr::product({state(c, 1), gen.tau})));
    return out;
}

Expr invariance_residual_form2(const LagrangianProblem& p, const GeneratorSet& gen) {
    Expr expr = invariance_head(p, gen) +
                Expr::product({p.lagrangian, total_deriv(gen.tau)}) -
                dot(force_F(p), omega(p, gen)) - resolve_gauge_rate(p, gen);
    return simplify(expr);
}

std::vector<Expr> G_quantity(const LagrangianProblem& p) {
    std::vector<Expr> out;
    out.reserve(p.n);
    for (int c = 0; c < p.n; ++c) {
        std::vector<Expr> terms;
        for (int i = 1; i <= p.m; ++i) {
            Expr term = Expr::product({Expr::constant(static_cast<double>(i)),
                                       total_deriv_n(dL_dstate(p, c, i), i - 1)});
            if (i % 2 == 0) term = Expr::negate(std::move(term)); // sign (-1)^(i-1)
            terms.push_back(std::move(term));
        }
        for (int k = 2; k <= p.m; ++k) {
            for (int i = 2; i <= k; ++i) {
                Expr coeff = Expr::quotient(falling_product_expr(i, 2),
                                            Expr::int_pow(observer_t() - theta(), i - 1));
                Expr term = Expr::product({coeff, Expr::constant(binomial(k, k - i)),
                                           total_deriv_n(dL_dstate(p, c, k), k - i)});
                if (i % 2 == 1) term = Expr::negate(std::move(term)); // sign (-1)^i
                terms.push_back(std::move(term));
            }
        }
        out.push_back(simplify(Expr::sum(std::move(terms))));
    }
    return out;
}

Expr condition17_residual(const LagrangianProblem& p, const GeneratorSet& gen) {
    return simplify(dot(G_quantity(p), omega(p, gen)) +
                    Expr::product({p.lagrangian, gen.tau}));
}

std::pair<Expr, GaugeKind> noether_charge(const LagrangianProblem& p, const GeneratorSet& gen) {
    std::vector<Expr> terms;
    std::vector<Expr> hamiltonian{p.lagrangian};
    for (int j = 1; j <= p.m; ++j) {
        std::vector<Expr> psij = psi(p, j);
        std::vector<Expr> rho_jm1 = rho(p, gen, j - 1);
        for (int c = 0; c < p.n; ++c) {
            terms.push_back(Expr::product({psij[c], rho_jm1[c]}));
            hamiltonian.push_back(Expr::negate(Expr::product({psij[c], state(c, j)})));
        }
    }
    terms.push_back(Expr::product({Expr::sum(std::move(hamiltonian)), gen.tau}));
    return {simplify(Expr::sum(std::move(terms))), gen.gauge};
}

DerivedSystem derive_system(const LagrangianProblem& p, const GeneratorSet& gen) {
    DerivedSystem d;
    d.psi.reserve(p.m + 1);
    for (int j = 0; j <= p.m; ++j) d.psi.push_back(psi(p, j));
    d.force = force_F(p);
    d.el_residual.resize(p.n);
    for (int c = 0; c < p.n; ++c) d.el_residual[c] = simplify(d.psi[0][c] - d.force[c]);
    d.g_quantity = G_quantity(p);
    d.dbr_residual = dubois_reymond_residual(p);
    auto [charge, mode] = noether_charge(p, gen);
    d.charge_symbolic = std::move(charge);
    d.gauge_mode = mode;
    d.gauge_rate = resolve_gauge_rate(p, gen);
    if (gen.gauge == GaugeKind::Symbolic) d.gauge_symbolic = simplify(*gen.gauge_expr);
    return d;
}

} // namespace falva
