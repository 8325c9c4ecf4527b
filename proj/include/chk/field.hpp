#pragma once

// Exact arithmetic in Q(i, sqrt2, sqrt5).
//
// Coordinates are over {1, r2, r5, r10, i, i*r2, i*r5, i*r10}. Index bits:
// bit0 = sqrt2 factor, bit1 = sqrt5 factor, bit2 = imaginary unit.

#include "chk/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chk {

class FieldElem {
public:
    static constexpr int kDim = 8;
    using Coeffs = std::array<Rational, kDim>;

    FieldElem() = default;
    FieldElem(const Rational& r) { c_[0] = r; }        // NOLINT(google-explicit-constructor)
    FieldElem(std::int64_t n) { c_[0] = Rational(n); }  // NOLINT(google-explicit-constructor)
    FieldElem(int n) { c_[0] = Rational(n); }           // NOLINT(google-explicit-constructor)
    explicit FieldElem(Coeffs c) : c_(std::move(c)) {}

    static FieldElem make(const std::array<Rational, kDim>& c) { return FieldElem(c); }

    static FieldElem unit(int idx, const Rational& q = Rational(1)) {
        FieldElem r;
        r.c_.at(static_cast<std::size_t>(idx)) = q;
        return r;
    }
    static FieldElem sqrt2() { return unit(1); }
    static FieldElem sqrt5() { return unit(2); }
    static FieldElem sqrt10() { return unit(3); }
    static FieldElem i() { return unit(4); }

    /// e^{i*pi*e/4} for any integer e.
    static FieldElem eighth_root(std::int64_t e) {
        int r = static_cast<int>(((e % 8) + 8) % 8);
        const Rational h(1, 2);
        switch (r) {
            case 0: return FieldElem(1);
            case 1: return make({0, h, 0, 0, 0, h, 0, 0});
            case 2: return i();
            case 3: return make({0, -h, 0, 0, 0, h, 0, 0});
            case 4: return FieldElem(-1);
            case 5: return make({0, -h, 0, 0, 0, -h, 0, 0});
            case 6: return -i();
            default: return make({0, h, 0, 0, 0, -h, 0, 0});
        }
    }

    /// sqrt(q) for q in {n, 1/n} with n in {1,2,5,10} times a rational square; throws otherwise.
    static FieldElem sqrt_of(const Rational& q);

    [[nodiscard]] const Rational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    [[nodiscard]] const Coeffs& coeffs() const { return c_; }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : c_) {
            if (!x.is_zero()) return false;
        }
        return true;
    }
    [[nodiscard]] bool is_rational() const {
        for (int k = 1; k < kDim; ++k) {
            if (!c_[static_cast<std::size_t>(k)].is_zero()) return false;
        }
        return true;
    }

    FieldElem operator-() const {
        FieldElem r(*this);
        for (auto& x : r.c_) x.negate();
        return r;
    }
    FieldElem& operator+=(const FieldElem& o) {
        for (std::size_t k = 0; k < kDim; ++k) {
            if (!o.c_[k].is_zero()) c_[k] += o.c_[k];
        }
        return *this;
    }
    FieldElem& operator-=(const FieldElem& o) {
        for (std::size_t k = 0; k < kDim; ++k) {
            if (!o.c_[k].is_zero()) c_[k] -= o.c_[k];
        }
        return *this;
    }
    FieldElem& operator*=(const FieldElem& o) {
        *this = *this * o;
        return *this;
    }
    FieldElem& operator/=(const FieldElem& o) {
        *this = *this * o.inverse();
        return *this;
    }

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        if (a.is_rational()) return b.scaled(a.c_[0]);
        if (b.is_rational()) return a.scaled(b.c_[0]);
        FieldElem r;
        for (int x = 0; x < kDim; ++x) {
            const auto& ax = a.c_[static_cast<std::size_t>(x)];
            if (ax.is_zero()) continue;
            for (int y = 0; y < kDim; ++y) {
                const auto& by = b.c_[static_cast<std::size_t>(y)];
                if (by.is_zero()) continue;
                auto [idx, factor] = basis_product(x, y);
                r.c_[static_cast<std::size_t>(idx)] += ax * by * Rational(factor);
            }
        }
        return r;
    }

    [[nodiscard]] FieldElem scaled(const Rational& q) const {
        FieldElem r(*this);
        if (q.is_one()) return r;
        for (auto& x : r.c_) {
            if (!x.is_zero()) x *= q;
        }
        return r;
    }

    friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.c_ == b.c_; }

    [[nodiscard]] FieldElem conj() const {
        FieldElem r(*this);
        for (std::size_t k = 4; k < kDim; ++k) r.c_[k].negate();
        return r;
    }

    /// Multiplicative inverse via the 8x8 rational system a*x = 1.
    [[nodiscard]] FieldElem inverse() const {
        if (is_zero()) throw DivisionByZero("field element division by zero");
        if (is_rational()) return FieldElem(Rational(1) / c_[0]);
        // Column y of M is a * e_y.
        std::array<std::array<Rational, kDim + 1>, kDim> m;
        for (int y = 0; y < kDim; ++y) {
            FieldElem col = *this * unit(y);
            for (int x = 0; x < kDim; ++x) {
                m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = col.c_[static_cast<std::size_t>(x)];
            }
        }
        for (int x = 0; x < kDim; ++x) m[static_cast<std::size_t>(x)][kDim] = Rational(x == 0 ? 1 : 0);
        for (std::size_t col = 0; col < kDim; ++col) {
            std::size_t piv = col;
            while (piv < kDim && m[piv][col].is_zero()) ++piv;
            if (piv == kDim) throw std::logic_error("singular multiplication matrix");
            std::swap(m[piv], m[col]);
            Rational inv = Rational(1) / m[col][col];
            for (std::size_t j = col; j <= kDim; ++j) m[col][j] *= inv;
            for (std::size_t r = 0; r < kDim; ++r) {
                if (r == col || m[r][col].is_zero()) continue;
                Rational f = m[r][col];
                for (std::size_t j = col; j <= kDim; ++j) m[r][j] -= f * m[col][j];
            }
        }
        FieldElem out;
        for (std::size_t x = 0; x < kDim; ++x) out.c_[x] = m[x][kDim];
        return out;
    }

    /// |a|^2 as a rational-coordinate field element (real part only).
    [[nodiscard]] FieldElem norm_sq() const { return *this * conj(); }

    template <class Real = double>
    [[nodiscard]] std::complex<Real> to_complex() const {
        using std::sqrt;
        const Real s2 = sqrt(Real(2));
        const Real s5 = sqrt(Real(5));
        const std::array<Real, 4> rad{Real(1), s2, s5, s2 * s5};
        Real re = 0;
        Real im = 0;
        for (std::size_t k = 0; k < 4; ++k) {
            if (!c_[k].is_zero()) re += c_[k].template to_real<Real>() * rad[k];
            if (!c_[k + 4].is_zero()) im += c_[k + 4].template to_real<Real>() * rad[k];
        }
        return {re, im};
    }

    /// to_complex at a requested binary precision, returned as doubles.
    [[nodiscard]] std::complex<double> to_complex(int precision_bits) const {
        if (precision_bits < 53) throw std::invalid_argument("precision_bits must be >= 53");
        if (precision_bits == 53) return to_complex<double>();
        using Big = boost::multiprecision::cpp_bin_float_100;
        auto z = to_complex<Big>();
        return {z.real().convert_to<double>(), z.imag().convert_to<double>()};
    }

    [[nodiscard]] double abs() const { return std::abs(to_complex<double>()); }

    /// Compact text: terms "q", "q*r2", ... joined by " + "; imaginary part as "i*(...)".
    [[nodiscard]] std::string to_string() const {
        static const std::array<const char*, 4> names{"", "r2", "r5", "r10"};
        auto part = [&](std::size_t off) {
            std::string s;
            for (std::size_t k = 0; k < 4; ++k) {
                const auto& q = c_[off + k];
                if (q.is_zero()) continue;
                if (!s.empty()) s += " + ";
                if (k == 0) {
                    s += q.to_string();
                } else {
                    s += q.to_string() + "*" + names[k];
                }
            }
            return s;
        };
        std::string re = part(0);
        std::string im = part(4);
        if (re.empty() && im.empty()) return "0";
        if (im.empty()) return re;
        std::string ims = "i*(" + im + ")";
        return re.empty() ? ims : re + " + " + ims;
    }

    /// Inverse of to_string; also accepts the full form
    /// "a0 + a1*r2 + a2*r5 + a3*r10 + i*(a4 + a5*r2 + a6*r5 + a7*r10)".
    static FieldElem parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const FieldElem& f) { return os << f.to_string(); }

    /// Product of basis elements x*y as (index, rational factor).
    static constexpr std::pair<int, int> basis_product(int x, int y) {
        int factor = 1;
        if ((x & 1) && (y & 1)) factor *= 2;
        if ((x & 2) && (y & 2)) factor *= 5;
        if ((x & 4) && (y & 4)) factor = -factor;
        return {x ^ y, factor};
    }

private:
    Coeffs c_{};
};

inline FieldElem FieldElem::sqrt_of(const Rational& q) {
    if (q.sign() < 0) return i() * sqrt_of(-q);
    if (q.is_zero()) return FieldElem(0);
    // q = a/b; sqrt(q) = sqrt(a*b)/b. Extract square part of a*b.
    Rational::BigInt n = q.numerator() * q.denominator();
    Rational::BigInt d = q.denominator();
    Rational::BigInt out = 1;
    for (Rational::BigInt p = 2; p * p <= n; ++p) {
        while (n % (p * p) == 0) {
            n /= p * p;
            out *= p;
        }
    }
    int idx = -1;
    if (n == 1) idx = 0;
    if (n == 2) idx = 1;
    if (n == 5) idx = 2;
    if (n == 10) idx = 3;
    if (idx < 0) throw std::domain_error("square root outside Q(i, sqrt2, sqrt5)");
    using BR = Rational::BigRational;
    return unit(idx, Rational(BR(out, d)));
}

inline FieldElem FieldElem::parse(std::string_view text) {
    auto strip = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    auto bad = [&]() { return std::invalid_argument("malformed field element: " + std::string(text)); };
    // Split a sum "t1 + t2 - t3" at top level into signed terms.
    auto parse_part = [&](std::string_view s, std::size_t off, Coeffs& out) {
        s = strip(s);
        if (s.empty()) throw bad();
        std::size_t pos = 0;
        bool neg = false;
        while (pos <= s.size()) {
            std::size_t next = pos;
            while (next + 2 < s.size() && !(s[next] == ' ' && (s[next + 1] == '+' || s[next + 1] == '-') && s[next + 2] == ' ')) ++next;
            if (next + 2 >= s.size()) next = s.size();
            std::string_view term = strip(s.substr(pos, next - pos));
            std::size_t star = term.find('*');
            std::size_t k = 0;
            std::string_view num = term;
            if (star != std::string_view::npos) {
                std::string_view rad = strip(term.substr(star + 1));
                num = term.substr(0, star);
                if (rad == "r2") {
                    k = 1;
                } else if (rad == "r5") {
                    k = 2;
                } else if (rad == "r10") {
                    k = 3;
                } else {
                    throw bad();
                }
            }
            Rational q = Rational::parse(num);
            if (neg) q.negate();
            out[off + k] += q;
            if (next >= s.size()) break;
            neg = s[next + 1] == '-';
            pos = next + 3;
        }
    };
    text = strip(text);
    Coeffs c{};
    std::size_t ipos = text.find("i*(");
    if (ipos != std::string_view::npos) {
        if (text.back() != ')') throw bad();
        std::string_view re = strip(text.substr(0, ipos));
        std::string_view im = text.substr(ipos + 3, text.size() - ipos - 4);
        if (!re.empty()) {
            if (re.size() < 2 || re.back() != '+') throw bad();
            re = strip(re.substr(0, re.size() - 1));
            parse_part(re, 0, c);
        }
        parse_part(im, 4, c);
    } else {
        parse_part(text, 0, c);
    }
    return FieldElem(c);
}

}  // namespace chk
