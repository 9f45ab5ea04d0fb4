#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "semiv/rational.hpp"

namespace semiv {

// Exponent vector of a monomial in X_1..X_n.
using Exponents = std::vector<std::uint32_t>;

inline std::uint64_t exps_total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

// A representative of an element of the local ring: a multivariate
// polynomial over the rationals with sparse exact storage. Series
// representatives are never needed because truncating above the conductor
// cannot change a value vector.
class RingElement {
public:
    using TermMap = std::map<Exponents, Rational>;

    explicit RingElement(std::size_t nvars) : nvars_(nvars) {}

    static RingElement constant(std::size_t nvars, Rational c) {
        RingElement p(nvars);
        if (c != 0) p.terms_.emplace(Exponents(nvars, 0), std::move(c));
        return p;
    }

    static RingElement variable(std::size_t nvars, std::size_t index) {
        RingElement p(nvars);
        Exponents e(nvars, 0);
        e[index] = 1;
        p.terms_.emplace(std::move(e), Rational(1));
        return p;
    }

    static RingElement monomial(std::size_t nvars, Exponents e, Rational c) {
        RingElement p(nvars);
        if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool has_constant_term() const {
        return terms_.count(Exponents(nvars_, 0)) != 0;
    }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, exps_total_degree(e));
        return d;
    }

    friend RingElement operator+(const RingElement& a, const RingElement& b) {
        RingElement r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend RingElement operator-(const RingElement& a, const RingElement& b) {
        RingElement r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend RingElement operator*(const RingElement& a, const Rational& c) {
        RingElement r(a.nvars_);
        if (c == 0) return r;
        for (const auto& [e, coeff] : a.terms_) r.terms_.emplace(e, coeff * c);
        return r;
    }

    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        RingElement r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    friend bool operator<(const RingElement& a, const RingElement& b) {
        return a.terms_ < b.terms_;
    }

    // Terms printed by ascending total degree, ties by ascending exponents.
    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::vector<const TermMap::value_type*> order;
        for (const auto& t : terms_) order.push_back(&t);
        std::stable_sort(order.begin(), order.end(), [](const auto* x, const auto* y) {
            const auto dx = exps_total_degree(x->first), dy = exps_total_degree(y->first);
            return dx != dy ? dx < dy : x->first < y->first;
        });
        std::string s;
        for (const auto* t : order) {
            const auto& [e, c] = *t;
            const bool neg = c < 0;
            const Rational mag = neg ? Rational(-c) : c;
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            std::string vars;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += names[i];
                if (e[i] > 1) vars += "^" + std::to_string(e[i]);
            }
            if (vars.empty())
                s += rat_to_string(mag);
            else if (mag == 1)
                s += vars;
            else
                s += rat_to_string(mag) + "*" + vars;
        }
        return s;
    }

private:
    void add_term(const Exponents& e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::size_t nvars_;
    TermMap terms_;
};

inline RingElement pow(const RingElement& a, std::uint64_t e) {
    RingElement r = RingElement::constant(a.nvars(), 1);
    for (std::uint64_t i = 0; i < e; ++i) r = r * a;
    return r;
}

}  // namespace semiv
