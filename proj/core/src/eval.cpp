#include "falva/error.hpp"
#include "falva/expr.hpp"

#include <cmath>

namespace falva {

Env& Env::set(const SymbolId& id, double value) {
    for (auto& [k, v] : binds_) {
        if (k == id) {
            v = value;
            return *this;
        }
    }
    binds_.emplace_back(id, value);
    return *this;
}

std::optional<double> Env::get(const SymbolId& id) const {
    for (const auto& [k, v] : binds_)
        if (k == id) return v;
    return std::nullopt;
}

Env Env::from_map(const std::map<SymbolId, double>& m) {
    Env env;
    for (const auto& [k, v] : m) env.set(k, v);
    return env;
}

namespace {

double int_power(double base, long k) {
    if (k < 0) return 1.0 / int_power(base, -k);
    double acc = 1.0, b = base;
    unsigned long e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

} // namespace

double eval(const Expr& e, const Env& env) {
    switch (e.kind()) {
    case ExprKind::Constant:
        return e.constant_value();
    case ExprKind::Symbol: {
        auto v = env.get(e.symbol_id());
        if (!v) throw UnboundSymbolError("unbound symbol: " + e.symbol_id().to_string());
        return *v;
    }
    case ExprKind::Sum: {
        double s = 0.0;
        for (const auto& c : e.children()) s += eval(c, env);
        return s;
    }
    case ExprKind::Product: {
        double p = 1.0;
        for (const auto& c : e.children()) p *= eval(c, env);
        return p;
    }
    case ExprKind::Negate:
        return -eval(e.children().front(), env);
    case ExprKind::Quotient: {
        double num = eval(e.children()[0], env);
        double den = eval(e.children()[1], env);
        if (den == 0.0) throw DomainError("division by zero");
        return num / den;
    }
    case ExprKind::IntPow: {
        double b = eval(e.children().front(), env);
        if (b == 0.0 && e.int_exponent() < 0) throw DomainError("zero base with negative exponent");
        return int_power(b, e.int_exponent());
    }
    case ExprKind::RealPow: {
        double b = eval(e.children()[0], env);
        double ex = eval(e.children()[1], env);
        if (b > 0.0) return std::pow(b, ex);
        if (b == 0.0) {
            if (ex > 0.0) return 0.0;
            if (ex == 0.0) return 1.0;
            throw DomainError("zero base with non-positive real exponent");
        }
        throw DomainError("real power of negative base");
    }
    case ExprKind::Apply: {
        double a = eval(e.children().front(), env);
        switch (e.function()) {
        case Func::Sin: return std::sin(a);
        case Func::Cos: return std::cos(a);
        case Func::Exp: return std::exp(a);
        case Func::Log:
            if (a <= 0.0) throw DomainError("log of non-positive value");
            return std::log(a);
        case Func::Sqrt:
            if (a < 0.0) throw DomainError("sqrt of negative value");
            return std::sqrt(a);
        }
        throw UnsupportedFunctionError("unknown function tag");
    }
    }
    throw Error("corrupt expression node");
}

} // namespace falva
