#ifndef FALVA_SYMBOL_HPP
#define FALVA_SYMBOL_HPP

#include <string>
#include <tuple>

namespace falva {

enum class SymbolKind {
    IntrinsicTime, // theta, the evolution variable
    ObserverTime,  // t, a fixed endpoint parameter (total derivative 0)
    Alpha,         // fractional order
    Param,         // named problem constant
    State,         // q_{component, order}
};

// Identity of a symbol. Value type, totally ordered, usable as a map key.
class SymbolId {
  public:
    static SymbolId intrinsic_time() { return SymbolId(SymbolKind::IntrinsicTime); }
    static SymbolId observer_time() { return SymbolId(SymbolKind::ObserverTime); }
    static SymbolId alpha() { return SymbolId(SymbolKind::Alpha); }

    static SymbolId param(std::string name) {
        SymbolId s(SymbolKind::Param);
        s.name_ = std::move(name);
        return s;
    }

    static SymbolId state(int component, int order) {
        SymbolId s(SymbolKind::State);
        s.component_ = component;
        s.order_ = order;
        return s;
    }

    SymbolKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    int component() const { return component_; }
    int order() const { return order_; }

    bool is_state() const { return kind_ == SymbolKind::State; }

    // Canonical text form: theta, t, alpha, the param name, or q<i>[_<k>].
    std::string to_string() const {
        switch (kind_) {
        case SymbolKind::IntrinsicTime: return "theta";
        case SymbolKind::ObserverTime: return "t";
        case SymbolKind::Alpha: return "alpha";
        case SymbolKind::Param: return name_;
        case SymbolKind::State:
            if (order_ == 0) return "q" + std::to_string(component_);
            return "q" + std::to_string(component_) + "_" + std::to_string(order_);
        }
        return "?";
    }

    friend bool operator==(const SymbolId& a, const SymbolId& b) {
        return a.key() == b.key();
    }
    friend bool operator!=(const SymbolId& a, const SymbolId& b) { return !(a == b); }
    friend bool operator<(const SymbolId& a, const SymbolId& b) {
        return a.key() < b.key();
    }

  private:
    explicit SymbolId(SymbolKind kind) : kind_(kind) {}

    std::tuple<int, const std::string&, int, int> key() const {
        return {static_cast<int>(kind_), name_, component_, order_};
    }

    SymbolKind kind_;
    std::string name_;
    int component_ = -1;
    int order_ = -1;
};

} // namespace falva

#endif
