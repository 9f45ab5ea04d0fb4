#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semiv/errors.hpp"
#include "semiv/series.hpp"

namespace semiv {

// An element of N ∪ {∞}, extended with an "at least p" state for orders that
// a truncated computation could not resolve. Fin and Inf are exact claims;
// AtLeast(p) only promises the true value is >= p.
class ExtNat {
public:
    static ExtNat fin(std::uint64_t v) { return ExtNat(Kind::fin, v); }
    static ExtNat inf() { return ExtNat(Kind::inf, 0); }
    static ExtNat at_least(std::uint64_t p) { return ExtNat(Kind::at_least, p); }

    static ExtNat from_order(const SeriesOrder& o, bool exact_zero) {
        if (o.is_known()) return fin(o.degree());
        return exact_zero ? inf() : at_least(o.bound());
    }

    bool is_fin() const { return kind_ == Kind::fin; }
    bool is_inf() const { return kind_ == Kind::inf; }
    bool is_at_least() const { return kind_ == Kind::at_least; }
    std::uint64_t value() const { return value_; }  // Fin value
    std::uint64_t bound() const { return value_; }  // AtLeast bound

    friend ExtNat operator+(const ExtNat& a, const ExtNat& b) {
        if (a.is_inf() || b.is_inf()) return inf();
        if (a.is_at_least() || b.is_at_least()) return at_least(a.value_ + b.value_);
        return fin(a.value_ + b.value_);
    }

    // a >= b, certified. AtLeast can certify dominance over Fin but never
    // over Inf or another AtLeast.
    friend bool certified_geq(const ExtNat& a, const ExtNat& b) {
        if (a.is_inf()) return true;
        if (b.is_inf()) return false;
        if (a.is_fin() && b.is_fin()) return a.value_ >= b.value_;
        if (a.is_at_least() && b.is_fin()) return a.value_ >= b.value_;
        return false;  // anything vs AtLeast on the right
    }

    friend bool operator==(const ExtNat&, const ExtNat&) = default;

    // arbitrary total order (Fin < AtLeast < Inf, then value); used for
    // deterministic sets, not for semantics
    friend bool operator<(const ExtNat& a, const ExtNat& b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
        return a.value_ < b.value_;
    }

    std::string to_string() const {
        switch (kind_) {
            case Kind::fin: return std::to_string(value_);
            case Kind::inf: return "inf";
            default: return ">=" + std::to_string(value_);
        }
    }

private:
    enum class Kind { fin = 0, at_least = 1, inf = 2 };
    ExtNat(Kind k, std::uint64_t v) : kind_(k), value_(v) {}
    Kind kind_;
    std::uint64_t value_;
};

// The value map lands in vectors of ExtNat, one entry per branch.
using ValueVector = std::vector<ExtNat>;

inline ValueVector vv_add(const ValueVector& a, const ValueVector& b) {
    ValueVector r;
    r.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
    return r;
}

// Coordinatewise min with Inf as the top element. An AtLeast(p) entry is
// tolerated only when it cannot change the answer: against Fin(d) with d < p
// the min is d regardless of the hidden value, and against Inf or another
// AtLeast the result stays an honest AtLeast.
inline ExtNat min_entry(const ExtNat& a, const ExtNat& b) {
    if (a.is_inf()) return b;
    if (b.is_inf()) return a;
    if (a.is_fin() && b.is_fin()) return a.value() <= b.value() ? a : b;
    if (a.is_at_least() && b.is_at_least())
        return ExtNat::at_least(std::min(a.bound(), b.bound()));
    const ExtNat& f = a.is_fin() ? a : b;
    const ExtNat& t = a.is_fin() ? b : a;
    if (t.bound() > f.value()) return f;
    throw TruncationError("min of " + f.to_string() + " and " + t.to_string() + " is undecided");
}

inline ValueVector vv_min(const ValueVector& a, const ValueVector& b) {
    ValueVector r;
    r.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(min_entry(a[i], b[i]));
    return r;
}

inline ValueVector vv_zero(std::size_t r) { return ValueVector(r, ExtNat::fin(0)); }

inline bool vv_is_zero(const ValueVector& v) {
    for (const auto& e : v)
        if (!(e.is_fin() && e.value() == 0)) return false;
    return true;
}

inline bool vv_all_inf(const ValueVector& v) {
    for (const auto& e : v)
        if (!e.is_inf()) return false;
    return true;
}

inline std::string vv_to_string(const ValueVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].to_string();
    }
    return s + ")";
}

}  // namespace semiv
