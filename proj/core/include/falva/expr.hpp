#ifndef FALVA_EXPR_HPP
#define FALVA_EXPR_HPP

#include "falva/symbol.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace falva {

enum class ExprKind {
    Constant,
    Symbol,
    Sum,      // n-ary
    Product,  // n-ary
    Negate,
    Quotient,
    IntPow,  // integer exponent
    RealPow, // arbitrary (possibly symbolic) exponent
    Apply,
};

enum class Func { Sin, Cos, Exp, Log, Sqrt };

const char* func_name(Func f);

namespace detail {
struct ExprNode;
}

// Immutable symbolic expression. Cheap to copy (shared tree); every
// transformation returns a new tree.
class Expr {
  public:
    // Default-constructed Expr is the constant 0.
    Expr();

    static Expr constant(double value);
    static Expr symbol(SymbolId id);
    static Expr sum(std::vector<Expr> terms);
    static Expr product(std::vector<Expr> factors);
    static Expr negate(Expr e);
    static Expr quotient(Expr num, Expr den);
    static Expr int_pow(Expr base, long exponent);
    static Expr real_pow(Expr base, Expr exponent);
    static Expr apply(Func f, Expr arg);

    ExprKind kind() const;
    double constant_value() const;        // Constant only
    const SymbolId& symbol_id() const;    // Symbol only
    const std::vector<Expr>& children() const;
    long int_exponent() const;            // IntPow only
    Func function() const;                // Apply only

    bool is_constant(double v) const;
    bool is_zero() const { return is_constant(0.0); }
    bool is_one() const { return is_constant(1.0); }

    // Stable identity of the underlying node, usable as a memo key.
    const void* identity() const { return node_.get(); }

  private:
    explicit Expr(std::shared_ptr<const detail::ExprNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const detail::ExprNode> node_;
};

// Convenience symbol factories.
Expr theta();
Expr observer_t();
Expr alpha_sym();
Expr param(const std::string& name);
Expr state(int component, int order);

Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr operator-(Expr a);
Expr operator+(double a, Expr b);
Expr operator+(Expr a, double b);
Expr operator-(double a, Expr b);
Expr operator-(Expr a, double b);
Expr operator*(double a, Expr b);
Expr operator*(Expr a, double b);
Expr operator/(double a, Expr b);
Expr operator/(Expr a, double b);

// Structural identity (same shape, same constants).
bool structurally_equal(const Expr& a, const Expr& b);
// Total order consistent with structurally_equal (for deterministic keys).
int structural_compare(const Expr& a, const Expr& b);

// ---- evaluation ------------------------------------------------------

// Small flat binding environment; linear lookup, fine for the handful of
// symbols a problem has.
class Env {
  public:
    Env& set(const SymbolId& id, double value);
    std::optional<double> get(const SymbolId& id) const;
    void clear() { binds_.clear(); }

    static Env from_map(const std::map<SymbolId, double>& m);

  private:
    std::vector<std::pair<SymbolId, double>> binds_;
};

// Throws UnboundSymbolError / DomainError.
double eval(const Expr& e, const Env& env);

// ---- calculus --------------------------------------------------------

// Exact partial derivative with respect to one symbol.
Expr partial(const Expr& e, const SymbolId& s);

// Total derivative along the trajectory:
//   D(e) = de/dtheta + sum_{i,k} q_{i,k+1} * de/dq_{i,k}
// Observer time, alpha and params are constants under D.
Expr total_deriv(const Expr& e);

// k-fold total derivative; k = 0 returns e.
Expr total_deriv_n(const Expr& e, int k);

// Replace symbols by expressions.
Expr substitute(const Expr& e, const std::map<SymbolId, Expr>& repl);
Expr substitute(const Expr& e, const std::map<SymbolId, double>& repl);

// Value-preserving cleanup: constant folding, 0/1 identities, flattening,
// like-term collection, sign normalization. Never expands products.
Expr simplify(const Expr& e);

// All symbols occurring in e.
std::set<SymbolId> free_symbols(const Expr& e);
void collect_free_symbols(const Expr& e, std::set<SymbolId>& out);

// ---- canonical text form ---------------------------------------------

// Infix form that re-parses under the problemio grammar.
std::string to_string(const Expr& e);

} // namespace falva

#endif
