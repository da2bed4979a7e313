#include "falva/expr.hpp"

#include "falva/error.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <unordered_map>

namespace falva {

namespace detail {

struct ExprNode {
    ExprKind kind;
    double value = 0.0;
    std::optional<SymbolId> sym;
    std::vector<Expr> children;
    long iexp = 0;
    Func func = Func::Sin;
};

} // namespace detail

using detail::ExprNode;

const char* func_name(Func f) {
    switch (f) {
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
    case Func::Exp: return "exp";
    case Func::Log: return "log";
    case Func::Sqrt: return "sqrt";
    }
    return "?";
}

ExprKind Expr::kind() const { return node_->kind; }
double Expr::constant_value() const { return node_->value; }
const SymbolId& Expr::symbol_id() const { return *node_->sym; }
const std::vector<Expr>& Expr::children() const { return node_->children; }
long Expr::int_exponent() const { return node_->iexp; }
Func Expr::function() const { return node_->func; }

bool Expr::is_constant(double v) const {
    return node_ && node_->kind == ExprKind::Constant && node_->value == v;
}

namespace {

double int_power(double base, long k) {
    if (k < 0) return 1.0 / int_power(base, -k);
    double acc = 1.0;
    double b = base;
    unsigned long e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

} // namespace

Expr Expr::constant(double value) {
    ExprNode n;
    n.kind = ExprKind::Constant;
    n.value = value;
    return Expr(std::make_shared<const ExprNode>(std::move(n)));
}

Expr Expr::symbol(SymbolId id) {
    ExprNode n;
    n.kind = ExprKind::Symbol;
    n.sym = std::move(id);
    return Expr(std::make_shared<const ExprNode>(std::move(n)));
}

Expr::Expr() { *this = Expr::constant(0.0); }

// Sum construction flattens nested sums, folds constants into the slot of
// the first constant term, and drops zeros.
Expr Expr::sum(std::vector<Expr> terms) {
    std::vector<Expr> flat;
    double c = 0.0;
    long const_pos = -1;
    auto take = [&](auto&& self, const Expr& t) -> void {
        if (t.kind() == ExprKind::Sum) {
            for (const auto& ch : t.children()) self(self, ch);
        } else if (t.kind() == ExprKind::Constant) {
            c += t.constant_value();
            if (const_pos < 0) const_pos = static_cast<long>(flat.size());
        } else {
            flat.push_back(t);
        }
    };
    for (const auto& t : terms) take(take, t);

    if (flat.empty()) return Expr::constant(c);
    if (c != 0.0) {
        const_pos = std::min<long>(const_pos, static_cast<long>(flat.size()));
        flat.insert(flat.begin() + const_pos, Expr::constant(c));
    }
    if (flat.size() == 1) return flat.front();

    ExprNode n;
    n.kind = ExprKind::Sum;
    n.children = std::move(flat);
    return Expr(std::make_shared<const ExprNode>(std::move(n)));
}

Expr Expr::product(std::vector<Expr> factors) {
    std::vector<Expr> flat;
    double c = 1.0;
    long const_pos = -1;
    bool zero = false;
    auto take = [&](auto&& self, const Expr& f) -> void {
        if (f.kind() == ExprKind::Product) {
            for (const auto& ch : f.children()) self(self, ch);
        } else if (f.kind() == ExprKind::Constant) {
            c *= f.constant_value();
            if (f.constant_value() == 0.0) zero = true;
            if (const_pos < 0) const_pos = static_cast<long>(flat.size());
        } else {
            flat.push_back(f);
        }
    };
    for (const auto& f : factors) take(take, f);

    if (zero) return Expr::constant(0.0);
    if (flat.empty()) return Expr::constant(c);
    if (c != 1.0) {
        const_pos = std::min<long>(const_pos, static_cast<long>(flat.size()));
        flat.insert(flat.begin() + const_pos, Expr::constant(c));
    }
    if (flat.size() == 1) return flat.front();

    ExprNode n;
    n.kind = ExprKind::Product;
    n.children = std::move(flat);
    return Expr(std::make_shared<const ExprNode>(std::move(n)));
}

Expr Expr::negate(Expr e) {
    if (e.kind() == ExprKind::Constant) return Expr::constant(-e.constant_value());
    if (e.kind() == ExprKind::Negate) return e.children().front();
    ExprNode n;
    n.kind = ExprKind::Negate;
    n.children = {std::move(e)};
    return Expr(std::make_shared<const ExprNode>(std::move(n)));
}

Expr Expr::quotient(Expr num, Expr den) {
    if (den.is_one()) return num;
    if (num.is_zero() && !(den.kind() == ExprKind::Constant && den.constant_value() == 0.0))
        return Expr::constant(0.0);
    if (num.kind() == ExprKind::Constant && den.kind() == ExprKind::Constant &&
        den.constant_value() != 0.0)
        return Expr::constant(num.constant_value() / den.constant_value());
    ExprNode n;
    n.kind = ExprKind::Quotient;
    n.children = {std::move(num), std::move(den)};
    return Expr(std::make_shared<const ExprNode>(std::move(n)));
}

Expr Expr::int_pow(Expr base, long exponent) {
    if (exponent == 0) return Expr::constant(1.0);
    if (exponent == 1) return base;
    if (base.kind() == ExprKind::Constant) {
        double b = base.constant_value();
        if (!(b == 0.0 && exponent < 0)) return Expr::constant(int_power(b, exponent));
    }
    ExprNode n;
    n.kind = ExprKind::IntPow;
    n.iexp = exponent;
    n.children = {std::move(base)};
    return Expr(std::make_shared<const ExprNode>(std::move(n)));
}

Expr Expr::real_pow(Expr base, Expr exponent) {
    if (exponent.kind() == ExprKind::Constant) {
        double ex = exponent.constant_value();
        // x^0 folds to 1, matching the alpha = 1 limit of the weight.
        if (ex == 0.0) return Expr::constant(1.0);
        if (ex == 1.0) return base;
        if (ex == std::floor(ex) && std::abs(ex) <= 16.0)
            return Expr::int_pow(std::move(base), static_cast<long>(ex));
        if (base.kind() == ExprKind::Constant && base.constant_value() > 0.0)
            return Expr::constant(std::pow(base.constant_value(), ex));
    }
    if (base.is_one()) return Expr::constant(1.0);
    ExprNode n;
    n.kind = ExprKind::RealPow;
    n.children = {std::move(base), std::move(exponent)};
    return Expr(std::make_shared<const ExprNode>(std::move(n)));
}

Expr Expr::apply(Func f, Expr arg) {
    if (arg.kind() == ExprKind::Constant) {
        double a = arg.constant_value();
        switch (f) {
        case Func::Sin: return Expr::constant(std::sin(a));
        case Func::Cos: return Expr::constant(std::cos(a));
        case Func::Exp: return Expr::constant(std::exp(a));
        case Func::Log:
            if (a > 0.0) return Expr::constant(std::log(a));
            break; // leave node, eval reports the domain error
        case Func::Sqrt:
            if (a >= 0.0) return Expr::constant(std::sqrt(a));
            break;
        }
    }
    ExprNode n;
    n.kind = ExprKind::Apply;
    n.func = f;
    n.children = {std::move(arg)};
    return Expr(std::make_shared<const ExprNode>(std::move(n)));
}

Expr theta() { return Expr::symbol(SymbolId::intrinsic_time()); }
Expr observer_t() { return Expr::symbol(SymbolId::observer_time()); }
Expr alpha_sym() { return Expr::symbol(SymbolId::alpha()); }
Expr param(const std::string& name) { return Expr::symbol(SymbolId::param(name)); }
Expr state(int component, int order) { return Expr::symbol(SymbolId::state(component, order)); }

Expr operator+(Expr a, Expr b) { return Expr::sum({std::move(a), std::move(b)}); }
Expr operator-(Expr a, Expr b) { return Expr::sum({std::move(a), Expr::negate(std::move(b))}); }
Expr operator*(Expr a, Expr b) { return Expr::product({std::move(a), std::move(b)}); }
Expr operator/(Expr a, Expr b) { return Expr::quotient(std::move(a), std::move(b)); }
Expr operator-(Expr a) { return Expr::negate(std::move(a)); }
Expr operator+(double a, Expr b) { return Expr::constant(a) + std::move(b); }
Expr operator+(Expr a, double b) { return std::move(a) + Expr::constant(b); }
Expr operator-(double a, Expr b) { return Expr::constant(a) - std::move(b); }
Expr operator-(Expr a, double b) { return std::move(a) - Expr::constant(b); }
Expr operator*(double a, Expr b) { return Expr::constant(a) * std::move(b); }
Expr operator*(Expr a, double b) { return std::move(a) * Expr::constant(b); }
Expr operator/(double a, Expr b) { return Expr::constant(a) / std::move(b); }
Expr operator/(Expr a, double b) { return std::move(a) / Expr::constant(b); }

// ---- structural order --------------------------------------------------

int structural_compare(const Expr& a, const Expr& b) {
    if (a.identity() == b.identity()) return 0;
    if (a.kind() != b.kind()) return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
    switch (a.kind()) {
    case ExprKind::Constant: {
        double x = a.constant_value(), y = b.constant_value();
        if (x < y) return -1;
        if (x > y) return 1;
        return 0;
    }
    case ExprKind::Symbol: {
        if (a.symbol_id() < b.symbol_id()) return -1;
        if (b.symbol_id() < a.symbol_id()) return 1;
        return 0;
    }
    case ExprKind::IntPow:
        if (a.int_exponent() != b.int_exponent())
            return a.int_exponent() < b.int_exponent() ? -1 : 1;
        break;
    case ExprKind::Apply:
        if (a.function() != b.function())
            return static_cast<int>(a.function()) < static_cast<int>(b.function()) ? -1 : 1;
        break;
    default:
        break;
    }
    const auto& ca = a.children();
    const auto& cb = b.children();
    if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
    for (size_t i = 0; i < ca.size(); ++i) {
        int c = structural_compare(ca[i], cb[i]);
        if (c != 0) return c;
    }
    return 0;
}

bool structurally_equal(const Expr& a, const Expr& b) { return structural_compare(a, b) == 0; }

// ---- simplify ----------------------------------------------------------

namespace {

struct TermPart {
    Expr core;    // never Constant/Negate, coefficient stripped
    double coeff;
};

// Split t into coeff * core with core free of leading constants and signs.
TermPart decompose_term(const Expr& t) {
    switch (t.kind()) {
    case ExprKind::Constant:
        return {Expr::constant(1.0), t.constant_value()};
    case ExprKind::Negate: {
        TermPart inner = decompose_term(t.children().front());
        inner.coeff = -inner.coeff;
        return inner;
    }
    case ExprKind::Product: {
        double c = 1.0;
        std::vector<Expr> rest;
        for (const auto& f : t.children()) {
            if (f.kind() == ExprKind::Constant) {
                c *= f.constant_value();
            } else if (f.kind() == ExprKind::Negate) {
                c = -c;
                rest.push_back(f.children().front());
            } else {
                rest.push_back(f);
            }
        }
        if (rest.empty()) return {Expr::constant(1.0), c};
        Expr core = rest.size() == 1 ? rest.front() : Expr::product(rest);
        return {core, c};
    }
    default:
        return {t, 1.0};
    }
}

Expr rebuild_term(const TermPart& p) {
    if (p.coeff == 0.0) return Expr::constant(0.0);
    if (p.core.is_one()) return Expr::constant(p.coeff);
    Expr body = p.coeff == 1.0 || p.coeff == -1.0
                    ? p.core
                    : Expr::product({Expr::constant(std::abs(p.coeff)), p.core});
    return p.coeff < 0.0 ? Expr::negate(std::move(body)) : body;
}

class Simplifier {
  public:
    Expr run(const Expr& e) {
        auto it = memo_.find(e.identity());
        if (it != memo_.end()) return it->second;
        Expr r = dispatch(e);
        memo_.emplace(e.identity(), r);
        return r;
    }

  private:
    Expr dispatch(const Expr& e) {
        switch (e.kind()) {
        case ExprKind::Constant:
        case ExprKind::Symbol:
            return e;
        case ExprKind::Sum: return simplify_sum(e);
        case ExprKind::Product: return simplify_product(e);
        case ExprKind::Negate: {
            Expr c = run(e.children().front());
            if (c.kind() == ExprKind::Sum) {
                std::vector<Expr> terms;
                terms.reserve(c.children().size());
                for (const auto& t : c.children()) terms.push_back(Expr::negate(t));
                return run(Expr::sum(std::move(terms)));
            }
            return Expr::negate(std::move(c));
        }
        case ExprKind::Quotient: {
            Expr num = run(e.children()[0]);
            Expr den = run(e.children()[1]);
            bool neg = false;
            if (num.kind() == ExprKind::Negate) {
                num = num.children().front();
                neg = !neg;
            }
            if (den.kind() == ExprKind::Negate) {
                den = den.children().front();
                neg = !neg;
            }
            Expr q = Expr::quotient(std::move(num), std::move(den));
            return neg ? Expr::negate(std::move(q)) : q;
        }
        case ExprKind::IntPow: {
            Expr base = run(e.children().front());
            if (base.kind() == ExprKind::IntPow)
                return Expr::int_pow(base.children().front(),
                                     base.int_exponent() * e.int_exponent());
            return Expr::int_pow(std::move(base), e.int_exponent());
        }
        case ExprKind::RealPow:
            return Expr::real_pow(run(e.children()[0]), run(e.children()[1]));
        case ExprKind::Apply:
            return Expr::apply(e.function(), run(e.children().front()));
        }
        return e;
    }

    // Collect like terms, preserving first-occurrence order.
    Expr simplify_sum(const Expr& e) {
        std::vector<TermPart> parts;
        auto add_term = [&](const Expr& raw) {
            TermPart p = decompose_term(raw);
            for (auto& q : parts) {
                if (structurally_equal(q.core, p.core)) {
                    q.coeff += p.coeff;
                    return;
                }
            }
            parts.push_back(std::move(p));
        };
        for (const auto& t : e.children()) {
            Expr st = run(t);
            if (st.kind() == ExprKind::Sum) {
                for (const auto& u : st.children()) add_term(u);
            } else {
                add_term(st);
            }
        }
        std::vector<Expr> terms;
        terms.reserve(parts.size());
        for (const auto& p : parts) {
            if (p.coeff == 0.0) continue;
            terms.push_back(rebuild_term(p));
        }
        return Expr::sum(std::move(terms));
    }

    // Fold signs/constants and merge repeated bases into integer powers.
    Expr simplify_product(const Expr& e) {
        double c = 1.0;
        struct BasePow {
            Expr base;
            long exp;
        };
        std::vector<BasePow> factors;
        auto add_factor = [&](auto&& self, const Expr& raw) -> void {
            switch (raw.kind()) {
            case ExprKind::Constant:
                c *= raw.constant_value();
                return;
            case ExprKind::Negate:
                c = -c;
                self(self, raw.children().front());
                return;
            case ExprKind::Product:
                for (const auto& f : raw.children()) self(self, f);
                return;
            case ExprKind::IntPow: {
                const Expr& b = raw.children().front();
                for (auto& bp : factors) {
                    if (structurally_equal(bp.base, b)) {
                        bp.exp += raw.int_exponent();
                        return;
                    }
                }
                factors.push_back({b, raw.int_exponent()});
                return;
            }
            default:
                for (auto& bp : factors) {
                    if (structurally_equal(bp.base, raw)) {
                        bp.exp += 1;
                        return;
                    }
                }
                factors.push_back({raw, 1});
                return;
            }
        };
        for (const auto& f : e.children()) add_factor(add_factor, run(f));

        if (c == 0.0) return Expr::constant(0.0);
        std::vector<Expr> out;
        out.reserve(factors.size() + 1);
        if (std::abs(c) != 1.0) out.push_back(Expr::constant(std::abs(c)));
        for (const auto& bp : factors) {
            if (bp.exp == 0) continue;
            out.push_back(Expr::int_pow(bp.base, bp.exp));
        }
        Expr r = Expr::product(std::move(out));
        return c < 0.0 ? Expr::negate(std::move(r)) : r;
    }

    std::unordered_map<const void*, Expr> memo_;
};

} // namespace

Expr simplify(const Expr& e) {
    Simplifier s;
    return s.run(e);
}

} // namespace falva
