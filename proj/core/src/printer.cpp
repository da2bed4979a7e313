#include "falva/expr.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace falva {

namespace {

// Shortest decimal form that round-trips through strtod.
std::string fmt_double(double v) {
    if (v == static_cast<double>(static_cast<long long>(v)) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
        return buf;
    }
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

// Precedence for parenthesization: sum < negate < product/quotient < power < primary.
int precedence(const Expr& e) {
    switch (e.kind()) {
    case ExprKind::Sum: return 1;
    case ExprKind::Negate: return 2;
    case ExprKind::Product:
    case ExprKind::Quotient: return 3;
    case ExprKind::IntPow:
    case ExprKind::RealPow: return 4;
    case ExprKind::Constant:
        return e.constant_value() < 0.0 ? 2 : 5;
    case ExprKind::Symbol:
    case ExprKind::Apply: return 5;
    }
    return 5;
}

void print(const Expr& e, int min_prec, std::string& out);

void print_wrapped(const Expr& e, int min_prec, std::string& out) {
    if (precedence(e) < min_prec) {
        out += '(';
        print(e, 0, out);
        out += ')';
    } else {
        print(e, min_prec, out);
    }
}

void print(const Expr& e, int /*min_prec*/, std::string& out) {
    switch (e.kind()) {
    case ExprKind::Constant:
        out += fmt_double(e.constant_value());
        return;
    case ExprKind::Symbol:
        out += e.symbol_id().to_string();
        return;
    case ExprKind::Sum: {
        bool first = true;
        for (const auto& t : e.children()) {
            if (t.kind() == ExprKind::Negate) {
                out += '-';
                print_wrapped(t.children().front(), 2, out);
            } else if (t.kind() == ExprKind::Constant && t.constant_value() < 0.0 && !first) {
                out += '-';
                out += fmt_double(-t.constant_value());
            } else {
                if (!first) out += '+';
                print_wrapped(t, 2, out);
            }
            first = false;
        }
        return;
    }
    case ExprKind::Product: {
        bool first = true;
        for (const auto& f : e.children()) {
            if (!first) out += '*';
            print_wrapped(f, 3, out);
            first = false;
        }
        return;
    }
    case ExprKind::Negate:
        out += '-';
        print_wrapped(e.children().front(), 3, out);
        return;
    case ExprKind::Quotient:
        print_wrapped(e.children()[0], 3, out);
        out += '/';
        print_wrapped(e.children()[1], 4, out);
        return;
    case ExprKind::IntPow: {
        print_wrapped(e.children().front(), 5, out);
        out += '^';
        long k = e.int_exponent();
        if (k < 0) {
            out += '(';
            out += std::to_string(k);
            out += ')';
        } else {
            out += std::to_string(k);
        }
        return;
    }
    case ExprKind::RealPow:
        print_wrapped(e.children()[0], 5, out);
        out += '^';
        print_wrapped(e.children()[1], 4, out);
        return;
    case ExprKind::Apply:
        out += func_name(e.function());
        out += '(';
        print(e.children().front(), 0, out);
        out += ')';
        return;
    }
}

} // namespace

std::string to_string(const Expr& e) {
    std::string out;
    print(e, 0, out);
    return out;
}

} // namespace falva
