#pragma once

#include <array>
#include <string>

namespace nclogic {

// One of the four values 1, b, n, 0, stored as independent truth and falsity
// bits.  b has both bits set, n has neither.  Designated means the truth bit.
struct TruthValue {
    bool truth = false;
    bool falsity = false;

    constexpr bool operator==(const TruthValue&) const = default;
    constexpr bool designated() const { return truth; }
    constexpr bool classical() const { return truth != falsity; }

    const char* name() const {
        if (truth) return falsity ? "b" : "1";
        return falsity ? "0" : "n";
    }
};

inline constexpr TruthValue tv_one{true, false};
inline constexpr TruthValue tv_b{true, true};
inline constexpr TruthValue tv_n{false, false};
inline constexpr TruthValue tv_zero{false, true};

// canonical row/column order for truth tables
inline constexpr std::array<TruthValue, 4> tv_all{tv_one, tv_b, tv_n, tv_zero};

// parses "1" | "b" | "n" | "0", returns false on anything else
inline bool tv_from_name(const std::string& s, TruthValue& out) {
    if (s == "1") out = tv_one;
    else if (s == "b") out = tv_b;
    else if (s == "n") out = tv_n;
    else if (s == "0") out = tv_zero;
    else return false;
    return true;
}

// Connective actions on values.  Each follows the twin truth/falsity clauses
// of the satisfaction relation, so the generated tables are derived, not
// transcribed.
constexpr TruthValue tv_neg(TruthValue a) { return {a.falsity, a.truth}; }
constexpr TruthValue tv_and(TruthValue a, TruthValue b) {
    return {a.truth && b.truth, a.falsity || b.falsity};
}
constexpr TruthValue tv_or(TruthValue a, TruthValue b) {
    return {a.truth || b.truth, a.falsity && b.falsity};
}
constexpr TruthValue tv_imp(TruthValue a, TruthValue b) {
    return {!a.truth || b.truth, a.truth && b.falsity};
}
constexpr TruthValue tv_iff(TruthValue a, TruthValue b) {
    return {a.truth == b.truth, (a.truth && b.falsity) || (a.falsity && b.truth)};
}
constexpr TruthValue tv_bot() { return tv_zero; }

// defined connectives, by their defining combinations
constexpr TruthValue tv_strong_imp(TruthValue a, TruthValue b) {
    return tv_and(tv_imp(a, b), tv_imp(tv_neg(b), tv_neg(a)));
}
constexpr TruthValue tv_strong_iff(TruthValue a, TruthValue b) {
    return tv_and(tv_iff(a, b), tv_iff(tv_neg(a), tv_neg(b)));
}
constexpr TruthValue tv_class_neg(TruthValue a) { return tv_imp(a, tv_bot()); }
constexpr TruthValue tv_bang(TruthValue a) { return tv_neg(tv_class_neg(a)); }
constexpr TruthValue tv_quest(TruthValue a) { return tv_class_neg(tv_neg(a)); }
constexpr TruthValue tv_circ(TruthValue a) { return tv_iff(tv_bang(a), tv_quest(a)); }

}  // namespace nclogic
