#ifndef FALVA_PROBLEM_HPP
#define FALVA_PROBLEM_HPP

#include "falva/expr.hpp"
#include "falva/sampling.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace falva {

// A fractional action-like variational problem of order m:
//   I[q] = 1/Gamma(alpha) * integral_a^t L(theta, q, ..., q^(m)) (t-theta)^(alpha-1) dtheta
struct LagrangianProblem {
    int m = 1;        // highest derivative order in L
    int n = 1;        // number of q components
    double alpha = 1; // fractional order, in (0, 1]
    double a = 0;     // left endpoint (intrinsic start)
    double t = 1;     // observer time, t > a
    Expr lagrangian;
    std::map<std::string, double> params;

    // Throws SchemaError on any violated invariant.
    void validate() const;

    // alpha, t and params as a substitution map (theta and states stay free).
    std::map<SymbolId, Expr> binding() const;
};

enum class GaugeKind {
    Symbolic,  // Lambda given as an expression of (theta, q, ..., q^(2m-1))
    Rate,      // dLambda/dtheta given as an expression
    ForceRate, // dLambda/dtheta := F . qdot
};

const char* gauge_kind_name(GaugeKind g);

// Candidate symmetry data: point transformation generators tau(theta, q),
// xi(theta, q) plus the gauge term specification.
struct GeneratorSet {
    Expr tau;
    std::vector<Expr> xi; // one per component
    GaugeKind gauge = GaugeKind::ForceRate;
    std::optional<Expr> gauge_expr; // Lambda (Symbolic) or Lambda-dot (Rate)

    static GeneratorSet null_symmetry(int n);

    void validate(const LagrangianProblem& problem) const;
};

// Every symbolic artifact derived from a problem.
struct DerivedSystem {
    std::vector<std::vector<Expr>> psi; // psi[j][c], j = 0..m
    std::vector<Expr> force;            // F per component
    std::vector<Expr> el_residual;      // psi^0 - F per component
    std::vector<Expr> g_quantity;       // G per component
    Expr dbr_residual;
    Expr charge_symbolic; // Noether charge before the gauge term
    Expr gauge_rate;      // resolved Lambda-dot
    std::optional<Expr> gauge_symbolic;
    GaugeKind gauge_mode = GaugeKind::ForceRate;
};

// Sampler covering the problem's symbols: theta in the interior of [a, t],
// alpha/t/params pinned to their values, states in a box.
SamplerConfig make_problem_sampler(const LagrangianProblem& problem, int points = 100);
// Same but with alpha, t and params kept symbolic (default kind ranges).
SamplerConfig make_symbolic_sampler(int points = 100);

} // namespace falva

#endif
