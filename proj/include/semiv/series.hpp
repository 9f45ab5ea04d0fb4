#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "semiv/errors.hpp"
#include "semiv/rational.hpp"

namespace semiv {

// Order of a truncated series: either a witnessed degree with a nonzero
// coefficient, or "at least p" when every stored coefficient below the
// precision p is zero.
class SeriesOrder {
public:
    static SeriesOrder known(std::uint64_t degree) { return SeriesOrder(true, degree); }
    static SeriesOrder at_least(std::uint64_t precision) { return SeriesOrder(false, precision); }

    bool is_known() const { return known_; }
    // degree of the lowest nonzero term; only meaningful when known
    std::uint64_t degree() const { return value_; }
    // the precision the series was known to; only meaningful when not known
    std::uint64_t bound() const { return value_; }

    friend bool operator==(const SeriesOrder&, const SeriesOrder&) = default;

private:
    SeriesOrder(bool known, std::uint64_t value) : known_(known), value_(value) {}
    bool known_;
    std::uint64_t value_;
};

// Univariate formal power series over the rationals, exactly represented up
// to a stated precision: every coefficient of degree < precision is stored
// (zeros omitted), degrees >= precision are unknown.
class TruncatedSeries {
public:
    using CoeffMap = std::map<std::uint64_t, Rational>;

    // the zero series at a given precision
    explicit TruncatedSeries(std::uint64_t precision) : precision_(precision) {}

    static TruncatedSeries monomial(std::uint64_t degree, Rational coeff, std::uint64_t precision) {
        TruncatedSeries s(precision);
        if (degree < precision && coeff != 0) s.coeffs_.emplace(degree, std::move(coeff));
        return s;
    }

    static TruncatedSeries one(std::uint64_t precision) { return monomial(0, 1, precision); }

    static TruncatedSeries from_terms(CoeffMap terms, std::uint64_t precision) {
        TruncatedSeries s(precision);
        for (auto& [d, c] : terms)
            if (d < precision && c != 0) s.coeffs_.emplace(d, std::move(c));
        return s;
    }

    std::uint64_t precision() const { return precision_; }
    const CoeffMap& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(std::uint64_t degree) const {
        auto it = coeffs_.find(degree);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    SeriesOrder order() const {
        if (coeffs_.empty()) return SeriesOrder::at_least(precision_);
        return SeriesOrder::known(coeffs_.begin()->first);
    }

    Rational leading_coeff() const {
        if (coeffs_.empty())
            throw OrderUnknownError("leading coefficient of a series with no visible term");
        return coeffs_.begin()->second;
    }

    // Reinterprets the same coefficients at a different precision. Only valid
    // when the caller knows the series exactly (e.g. a polynomial tail of
    // zeros); used by the exact-substitution path.
    TruncatedSeries with_precision(std::uint64_t precision) const {
        TruncatedSeries s(precision);
        for (const auto& [d, c] : coeffs_)
            if (d < precision) s.coeffs_.emplace(d, c);
        return s;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.precision_, b.precision_));
        for (const auto& [d, c] : a.coeffs_)
            if (d < r.precision_) r.coeffs_.emplace(d, c);
        for (const auto& [d, c] : b.coeffs_) {
            if (d >= r.precision_) continue;
            auto [it, inserted] = r.coeffs_.emplace(d, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) r.coeffs_.erase(it);
            }
        }
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a + (b * Rational(-1));
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const Rational& c) {
        TruncatedSeries r(a.precision_);
        if (c == 0) return r;
        for (const auto& [d, coeff] : a.coeffs_) r.coeffs_.emplace(d, coeff * c);
        return r;
    }

    // Cauchy product. The precision rule min(prec(a)+ordfloor(b),
    // prec(b)+ordfloor(a)) keeps deep knowledge through products of
    // high-order series: an unknown coefficient of a at degree prec(a) can
    // only touch degrees >= prec(a)+ord(b) of the product.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const std::uint64_t prec = std::min(a.precision_ + b.ord_floor(), b.precision_ + a.ord_floor());
        TruncatedSeries r(prec);
        for (const auto& [da, ca] : a.coeffs_) {
            if (da >= prec) break;
            for (const auto& [db, cb] : b.coeffs_) {
                const std::uint64_t d = da + db;
                if (d >= prec) break;
                auto [it, inserted] = r.coeffs_.emplace(d, ca * cb);
                if (!inserted) it->second += ca * cb;
            }
        }
        std::erase_if(r.coeffs_, [](const auto& kv) { return kv.second == 0; });
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.precision_ == b.precision_ && a.coeffs_ == b.coeffs_;
    }

private:
    std::uint64_t ord_floor() const {
        return coeffs_.empty() ? precision_ : coeffs_.begin()->first;
    }

    CoeffMap coeffs_;
    std::uint64_t precision_;
};

inline TruncatedSeries pow(const TruncatedSeries& a, std::uint64_t e) {
    if (e == 0) return TruncatedSeries::one(a.precision());
    TruncatedSeries r = a;
    for (std::uint64_t i = 1; i < e; ++i) r = r * a;
    return r;
}

}  // namespace semiv
