#ifndef FALVA_ODE_HPP
#define FALVA_ODE_HPP

#include "falva/problem.hpp"

#include <variant>
#include <vector>

namespace falva {

struct RK4Fixed {
    double h = 1e-3;
};

struct RK45Adaptive {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double h_init = 1e-3;
    double h_min = 1e-14;
};

struct IntegratorConfig {
    std::variant<RK4Fixed, RK45Adaptive> method = RK45Adaptive{};
    // Integration stops at theta = t - epsilon_cutoff. Zero is allowed for
    // alpha = 1, where the reduced system is regular at theta = t.
    double epsilon_cutoff = 0.0;
    long max_steps = 5'000'000;
};

struct TrajectorySample {
    double theta;
    std::vector<double> state; // orders 0..2m-1 per component, flattened
    double lambda;             // gauge term subtracted in the charge
    double charge;
    double el_check; // max-norm of the EL residual at this sample
};

struct Trajectory {
    int m = 0;
    int n = 0;
    std::vector<TrajectorySample> samples;
};

// First-order explicit form of the Euler-Lagrange equations. State layout:
// for each component the orders 0..2m-1, then one accumulated-Lambda slot.
// alpha, t and the parameters are bound numerically at construction, which
// folds every (1-alpha) factor away in the alpha = 1 case.
class ODESystem {
  public:
    ODESystem(const LagrangianProblem& p, const DerivedSystem& d, const GeneratorSet& gen);

    int n_state() const { return n_ * 2 * m_ + 1; }
    int components() const { return n_; }
    int order() const { return m_; }
    double left_end() const { return a_; }
    double singular_at() const { return t_; }
    bool singular() const { return alpha_ < 1.0; }
    GaugeKind gauge_mode() const { return gauge_mode_; }

    // Substitute alpha/t/params and simplify.
    Expr bind(const Expr& e) const;

    // Derivative of the full state (including the Lambda slot). Throws
    // DomainError past the singular endpoint and
    // SingularLeadingCoefficientError when the leading matrix degenerates.
    void rhs(double theta, const std::vector<double>& y, std::vector<double>& dy) const;

    // q^(2m) per component obtained from the linear solve.
    std::vector<double> top_derivatives(double theta, const std::vector<double>& y) const;

    // Evaluate a bound expression on a trajectory state; with_top binds the
    // order-2m symbols from the linear solve.
    double eval_on_state(const Expr& bound, double theta, const std::vector<double>& y,
                         bool with_top = false) const;

    // Max-norm of the EL residual with the top derivative bound on-shell.
    double el_check(double theta, const std::vector<double>& y) const;

    const std::optional<Expr>& gauge_symbolic_bound() const { return gauge_sym_bound_; }
    const Expr& dbr_residual_bound() const { return dbr_bound_; }

  private:
    void fill_env(Env& env, double theta, const std::vector<double>& y) const;

    int m_;
    int n_;
    double alpha_;
    double a_;
    double t_;
    std::map<SymbolId, Expr> binding_;
    std::vector<Expr> lead_;     // n x n leading coefficients, row-major
    std::vector<Expr> remainder_; // residual with top derivatives zeroed
    std::vector<Expr> el_bound_;
    Expr gauge_rate_bound_;
    std::optional<Expr> gauge_sym_bound_;
    Expr dbr_bound_;
    GaugeKind gauge_mode_;
};

// Reduce the EL residual to explicit first-order form. Requires the
// residual to be affine in the order-2m derivatives
// (NonlinearInTopDerivativeError otherwise).
ODESystem to_explicit_system(const LagrangianProblem& p, const DerivedSystem& d,
                             const GeneratorSet& gen);

// Integrate from span_begin to span_end recording every accepted step.
// init holds orders 0..2m-1 per component; the Lambda slot starts at 0.
// charge_expr is the symbolic charge evaluated (minus Lambda) per sample.
Trajectory integrate(const ODESystem& sys, const std::vector<double>& init, double span_begin,
                     double span_end, const IntegratorConfig& cfg, const Expr& charge_expr);

struct DriftResult {
    double abs_drift;
    double rel_drift;
};

// max_k |C_k - C_0| and its normalization by 1 + |C_0|.
DriftResult conservation_drift(const Trajectory& traj);

} // namespace falva

#endif
