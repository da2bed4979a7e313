#ifndef FALVA_VARIATIONAL_HPP
#define FALVA_VARIATIONAL_HPP

#include "falva/problem.hpp"

namespace falva {

// Generalized momenta, one vector entry per component:
//   psi^j = sum_{i=0}^{m-j} (-1)^i D^i dL/dq^(i+j),   0 <= j <= m.
// j = 0 gives the full Euler-Lagrange differential expression.
std::vector<Expr> psi(const LagrangianProblem& p, int j);

// Non-conservative force induced by the fractional weight. The gamma
// ratios are carried as falling products (1-alpha)(2-alpha)... so the
// whole expression vanishes identically at alpha = 1.
std::vector<Expr> force_F(const LagrangianProblem& p);

// psi^0 - F per component; zero along stationary trajectories.
std::vector<Expr> euler_lagrange_residual(const LagrangianProblem& p);

// DuBois-Reymond diagnostic:
//   D(L - sum_j psi^j . q^(j)) - dL/dtheta - F . qdot
Expr dubois_reymond_residual(const LagrangianProblem& p);

// rho^0 = xi, rho^i = D(rho^{i-1}) - q^(i) * D(tau).
std::vector<Expr> rho(const LagrangianProblem& p, const GeneratorSet& gen, int i);

// Invariance residual (necessary and sufficient form):
//   dL/dtheta tau + sum_i dL/dq^(i) . rho^i + L (D(tau) + (1-alpha)/(t-theta) tau) - Lambda-dot
Expr invariance_residual(const LagrangianProblem& p, const GeneratorSet& gen);

// Equivalent form trading the weight term for the force:
//   ... + L D(tau) - F . Omega - Lambda-dot,  Omega = xi - qdot tau
Expr invariance_residual_form2(const LagrangianProblem& p, const GeneratorSet& gen);

// The G quantity paired with Omega in the transversality-style condition.
std::vector<Expr> G_quantity(const LagrangianProblem& p);

// G . Omega + L tau — reported as a diagnostic, never enforced.
Expr condition17_residual(const LagrangianProblem& p, const GeneratorSet& gen);

// Symbolic part of the Noether charge:
//   sum_{j=1}^m psi^j . rho^{j-1} + (L - sum_j psi^j . q^(j)) tau
// The full charge subtracts the gauge term Lambda.
std::pair<Expr, GaugeKind> noether_charge(const LagrangianProblem& p, const GeneratorSet& gen);

// Lambda-dot for the given gauge mode (Symbolic gauges are differentiated).
Expr resolve_gauge_rate(const LagrangianProblem& p, const GeneratorSet& gen);

// Omega = xi - qdot * tau per component.
std::vector<Expr> omega(const LagrangianProblem& p, const GeneratorSet& gen);

// All of the above in one pass.
DerivedSystem derive_system(const LagrangianProblem& p, const GeneratorSet& gen);

} // namespace falva

#endif
