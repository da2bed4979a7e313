#include "falva/error.hpp"
#include "falva/expr.hpp"

#include <unordered_map>

namespace falva {

Expr partial(const Expr& e, const SymbolId& s) {
    switch (e.kind()) {
    case ExprKind::Constant:
        return Expr::constant(0.0);
    case ExprKind::Symbol:
        return Expr::constant(e.symbol_id() == s ? 1.0 : 0.0);
    case ExprKind::Sum: {
        std::vector<Expr> terms;
        terms.reserve(e.children().size());
        for (const auto& c : e.children()) terms.push_back(partial(c, s));
        return Expr::sum(std::move(terms));
    }
    case ExprKind::Product: {
        const auto& fs = e.children();
        std::vector<Expr> terms;
        terms.reserve(fs.size());
        for (size_t i = 0; i < fs.size(); ++i) {
            Expr di = partial(fs[i], s);
            if (di.is_zero()) continue;
            std::vector<Expr> prod;
            prod.reserve(fs.size());
            for (size_t j = 0; j < fs.size(); ++j) prod.push_back(j == i ? di : fs[j]);
            terms.push_back(Expr::product(std::move(prod)));
        }
        return Expr::sum(std::move(terms));
    }
    case ExprKind::Negate:
        return Expr::negate(partial(e.children().front(), s));
    case ExprKind::Quotient: {
        const Expr& num = e.children()[0];
        const Expr& den = e.children()[1];
        Expr dn = partial(num, s);
        Expr dd = partial(den, s);
        if (dd.is_zero()) return Expr::quotient(std::move(dn), den);
        Expr top = Expr::product({dn, den}) - Expr::product({num, dd});
        return Expr::quotient(std::move(top), Expr::int_pow(den, 2));
    }
    case ExprKind::IntPow: {
        const Expr& base = e.children().front();
        long k = e.int_exponent();
        Expr db = partial(base, s);
        if (db.is_zero()) return Expr::constant(0.0);
        return Expr::product(
            {Expr::constant(static_cast<double>(k)), Expr::int_pow(base, k - 1), db});
    }
    case ExprKind::RealPow: {
        const Expr& base = e.children()[0];
        const Expr& ex = e.children()[1];
        Expr dex = partial(ex, s);
        Expr db = partial(base, s);
        if (dex.is_zero()) {
            // plain power rule: ex * base^(ex-1) * base'
            if (db.is_zero()) return Expr::constant(0.0);
            return Expr::product({ex, Expr::real_pow(base, ex - Expr::constant(1.0)), db});
        }
        // general: base^ex * (ex' * log(base) + ex * base' / base)
        Expr bracket = Expr::product({dex, Expr::apply(Func::Log, base)}) +
                       Expr::product({ex, Expr::quotient(db, base)});
        return Expr::product({Expr::real_pow(base, ex), bracket});
    }
    case ExprKind::Apply: {
        const Expr& a = e.children().front();
        Expr da = partial(a, s);
        if (da.is_zero()) return Expr::constant(0.0);
        switch (e.function()) {
        case Func::Sin: return Expr::product({Expr::apply(Func::Cos, a), da});
        case Func::Cos: return Expr::negate(Expr::product({Expr::apply(Func::Sin, a), da}));
        case Func::Exp: return Expr::product({Expr::apply(Func::Exp, a), da});
        case Func::Log: return Expr::quotient(da, a);
        case Func::Sqrt:
            return Expr::quotient(da,
                                  Expr::product({Expr::constant(2.0), Expr::apply(Func::Sqrt, a)}));
        }
        throw UnsupportedFunctionError("cannot differentiate unknown function tag");
    }
    }
    throw Error("corrupt expression node");
}

void collect_free_symbols(const Expr& e, std::set<SymbolId>& out) {
    switch (e.kind()) {
    case ExprKind::Constant:
        return;
    case ExprKind::Symbol:
        out.insert(e.symbol_id());
        return;
    default:
        for (const auto& c : e.children()) collect_free_symbols(c, out);
    }
}

std::set<SymbolId> free_symbols(const Expr& e) {
    std::set<SymbolId> out;
    collect_free_symbols(e, out);
    return out;
}

Expr total_deriv(const Expr& e) {
    std::vector<Expr> terms;
    terms.push_back(partial(e, SymbolId::intrinsic_time()));
    for (const auto& s : free_symbols(e)) {
        if (!s.is_state()) continue;
        Expr de = partial(e, s);
        if (de.is_zero()) continue;
        terms.push_back(Expr::product({state(s.component(), s.order() + 1), std::move(de)}));
    }
    return Expr::sum(std::move(terms));
}

Expr total_deriv_n(const Expr& e, int k) {
    if (k < 0) throw ConfigError("total_deriv_n: negative order");
    Expr r = e;
    for (int i = 0; i < k; ++i) r = simplify(total_deriv(r));
    return r;
}

namespace {

Expr substitute_impl(const Expr& e, const std::map<SymbolId, Expr>& repl,
                     std::unordered_map<const void*, Expr>& memo) {
    auto it = memo.find(e.identity());
    if (it != memo.end()) return it->second;
    Expr r = e;
    switch (e.kind()) {
    case ExprKind::Constant:
        break;
    case ExprKind::Symbol: {
        auto f = repl.find(e.symbol_id());
        if (f != repl.end()) r = f->second;
        break;
    }
    case ExprKind::Sum:
    case ExprKind::Product: {
        std::vector<Expr> ch;
        ch.reserve(e.children().size());
        for (const auto& c : e.children()) ch.push_back(substitute_impl(c, repl, memo));
        r = e.kind() == ExprKind::Sum ? Expr::sum(std::move(ch)) : Expr::product(std::move(ch));
        break;
    }
    case ExprKind::Negate:
        r = Expr::negate(substitute_impl(e.children().front(), repl, memo));
        break;
    case ExprKind::Quotient:
        r = Expr::quotient(substitute_impl(e.children()[0], repl, memo),
                           substitute_impl(e.children()[1], repl, memo));
        break;
    case ExprKind::IntPow:
        r = Expr::int_pow(substitute_impl(e.children().front(), repl, memo), e.int_exponent());
        break;
    case ExprKind::RealPow:
        r = Expr::real_pow(substitute_impl(e.children()[0], repl, memo),
                           substitute_impl(e.children()[1], repl, memo));
        break;
    case ExprKind::Apply:
        r = Expr::apply(e.function(), substitute_impl(e.children().front(), repl, memo));
        break;
    }
    memo.emplace(e.identity(), r);
    return r;
}

} // namespace

Expr substitute(const Expr& e, const std::map<SymbolId, Expr>& repl) {
    std::unordered_map<const void*, Expr> memo;
    return substitute_impl(e, repl, memo);
}

Expr substitute(const Expr& e, const std::map<SymbolId, double>& repl) {
    std::map<SymbolId, Expr> m;
    for (const auto& [k, v] : repl) m.emplace(k, Expr::constant(v));
    return substitute(e, m);
}

} // namespace falva
