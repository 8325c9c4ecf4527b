#pragma once

// Bivariate polynomials in commuting symbols z, zb with exact coefficients.

#include "chk/field.hpp"

#include <complex>
#include <map>
#include <utility>

namespace chk {

class BiPoly {
public:
    using Monomial = std::pair<int, int>;  // (z exponent, zb exponent)
    using Terms = std::map<Monomial, FieldElem>;

    BiPoly() = default;
    BiPoly(const FieldElem& c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_[{0, 0}] = c;
    }

    static BiPoly monomial(int a, int b, const FieldElem& c = FieldElem(1)) {
        BiPoly p;
        if (!c.is_zero()) p.terms_[{a, b}] = c;
        return p;
    }
    static BiPoly z() { return monomial(1, 0); }
    static BiPoly zb() { return monomial(0, 1); }

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    [[nodiscard]] FieldElem coeff(int a, int b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? FieldElem(0) : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    [[nodiscard]] int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
        return d;
    }

    void add_term(int a, int b, const FieldElem& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace({a, b}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m.first, m.second, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m.first, m.second, -c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    BiPoly operator-() const { return scaled(FieldElem(-1)); }

    [[nodiscard]] BiPoly scaled(const FieldElem& s) const {
        BiPoly r;
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.terms_[m] = c * s;
        return r;
    }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
        }
        return r;
    }

    /// Shift exponents: multiplication by z^da zb^db.
    [[nodiscard]] BiPoly shifted(int da, int db) const {
        BiPoly r;
        for (const auto& [m, c] : terms_) r.terms_[{m.first + da, m.second + db}] = c;
        return r;
    }

    /// m-fold d/dz then n-fold d/dzb.
    [[nodiscard]] BiPoly derivative(int m, int n) const {
        BiPoly r;
        for (const auto& [mono, c] : terms_) {
            auto [a, b] = mono;
            if (a < m || b < n) continue;
            std::int64_t f = 1;
            for (int j = 0; j < m; ++j) f *= a - j;
            for (int j = 0; j < n; ++j) f *= b - j;
            r.terms_[{a - m, b - n}] = c.scaled(Rational(f));
        }
        return r;
    }

    /// Swap z <-> zb and conjugate coefficients.
    [[nodiscard]] BiPoly conj_swap() const {
        BiPoly r;
        for (const auto& [m, c] : terms_) r.terms_[{m.second, m.first}] = c.conj();
        return r;
    }

    /// Substitute z and conj(z).
    template <class Real = double>
    [[nodiscard]] std::complex<Real> evaluate(std::complex<Real> zv) const {
        const std::complex<Real> zc = std::conj(zv);
        std::complex<Real> acc = 0;
        for (const auto& [m, c] : terms_) {
            std::complex<Real> t = c.template to_complex<Real>();
            for (int j = 0; j < m.first; ++j) t *= zv;
            for (int j = 0; j < m.second; ++j) t *= zc;
            acc += t;
        }
        return acc;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    /// Human-readable form, e.g. "1*z^1*zb^1 + -1".
    [[nodiscard]] std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            s += "(" + it->second.to_string() + ")";
            if (it->first.first) s += "*z^" + std::to_string(it->first.first);
            if (it->first.second) s += "*zb^" + std::to_string(it->first.second);
        }
        return s;
    }

private:
    Terms terms_;
};

}  // namespace chk
