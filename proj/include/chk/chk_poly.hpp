#pragma once

// Chebyshev-Koornwinder polynomials U_{k,l}(z, zb), built from the three-term
// recurrences, plus differential-operator representations acting on them.

#include "chk/bipoly.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace chk {

class PolyTable {
public:
    explicit PolyTable(int max_degree) : max_degree_(max_degree) {
        if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
        entries_.resize(static_cast<std::size_t>(slot(max_degree, 0) + 1));
        at_mut(0, 0) = BiPoly(FieldElem(1));
        const BiPoly z = BiPoly::z();
        const BiPoly zb = BiPoly::zb();
        for (int n = 0; n < max_degree; ++n) {
            // U_{k+1,l} = z U_{k,l} - U_{k,l-1} - U_{k-1,l+1}
            for (int k = 0; k <= n; ++k) {
                int l = n - k;
                BiPoly p = z * get(k, l);
                p -= get(k, l - 1);
                p -= get(k - 1, l + 1);
                at_mut(k + 1, l) = std::move(p);
            }
            // U_{0,l+1} = zb U_{0,l} - U_{1,l-1}
            BiPoly q = zb * get(0, n);
            q -= get(1, n - 1);
            at_mut(0, n + 1) = std::move(q);
        }
    }

    [[nodiscard]] int max_degree() const { return max_degree_; }

    [[nodiscard]] bool contains(int k, int l) const { return k >= 0 && l >= 0 && k + l <= max_degree_; }

    /// U_{k,l}; zero for negative indices.
    [[nodiscard]] const BiPoly& get(int k, int l) const {
        static const BiPoly zero;
        if (k < 0 || l < 0) return zero;
        if (k + l > max_degree_) throw std::out_of_range("index outside polynomial table");
        return entries_[static_cast<std::size_t>(slot(k, l))];
    }
    [[nodiscard]] const BiPoly& operator()(int k, int l) const { return get(k, l); }

    /// Returns (z U_{k,l} - (U_{k+1,l}+U_{k,l-1}+U_{k-1,l+1}), zb U_{k,l} - (U_{k,l+1}+U_{k-1,l}+U_{k+1,l-1})).
    [[nodiscard]] std::pair<BiPoly, BiPoly> recurrence_residual(int k, int l) const {
        if (k < 0 || l < 0 || k + l + 1 > max_degree_) throw std::out_of_range("recurrence residual outside table");
        BiPoly r1 = BiPoly::z() * get(k, l);
        r1 -= get(k + 1, l);
        r1 -= get(k, l - 1);
        r1 -= get(k - 1, l + 1);
        BiPoly r2 = BiPoly::zb() * get(k, l);
        r2 -= get(k, l + 1);
        r2 -= get(k - 1, l);
        r2 -= get(k + 1, l - 1);
        return {r1, r2};
    }

    /// Coefficient of z^a zb^b in U_{k,l} equals conj of coefficient of z^b zb^a in U_{l,k}.
    [[nodiscard]] bool conjugation_symmetry_check(int k, int l) const {
        const BiPoly& p = get(k, l);
        const BiPoly& q = get(l, k);
        if (p.terms().size() != q.terms().size()) return false;
        for (const auto& [m, c] : p.terms()) {
            if (c != q.coeff(m.second, m.first).conj()) return false;
        }
        return true;
    }

    /// Unique expansion of p in the U basis (graded, monic leading terms).
    [[nodiscard]] std::map<std::pair<int, int>, FieldElem> expand(BiPoly p) const {
        std::map<std::pair<int, int>, FieldElem> out;
        if (p.degree() > max_degree_) throw std::out_of_range("polynomial degree exceeds table");
        while (!p.is_zero()) {
            // highest total degree monomial
            std::pair<int, int> top{-1, -1};
            for (const auto& [m, c] : p.terms()) {
                if (m.first + m.second > top.first + top.second) top = m;
            }
            FieldElem c = p.coeff(top.first, top.second);
            p -= get(top.first, top.second).scaled(c);
            out[top] += c;
        }
        for (auto it = out.begin(); it != out.end();) {
            it = it->second.is_zero() ? out.erase(it) : std::next(it);
        }
        return out;
    }

    /// Recombine a U-basis expansion into a polynomial.
    [[nodiscard]] BiPoly combine(const std::map<std::pair<int, int>, FieldElem>& coeffs) const {
        BiPoly p;
        for (const auto& [kl, c] : coeffs) p += get(kl.first, kl.second).scaled(c);
        return p;
    }

    /// Rows "k,l,a,b,coeff" in lexicographic (k,l,a,b) order.
    void write_csv(std::ostream& os) const {
        for (int k = 0; k <= max_degree_; ++k) {
            for (int l = 0; k + l <= max_degree_; ++l) {
                for (const auto& [m, c] : get(k, l).terms()) {
                    os << k << ',' << l << ',' << m.first << ',' << m.second << ',' << c.to_string() << '\n';
                }
            }
        }
    }

private:
    static int slot(int k, int l) {
        int n = k + l;
        return n * (n + 1) / 2 + k;
    }
    BiPoly& at_mut(int k, int l) { return entries_[static_cast<std::size_t>(slot(k, l))]; }

    int max_degree_;
    std::vector<BiPoly> entries_;
};

inline PolyTable build_table(int max_degree) { return PolyTable(max_degree); }

inline BiPoly partial_derivative(const BiPoly& p, int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("derivative orders must be >= 0");
    return p.derivative(m, n);
}

inline Rational factorial(int n) {
    Rational r(1);
    for (int j = 2; j <= n; ++j) r *= Rational(j);
    return r;
}

/// D_{m,N-m}/(m!(N-m)!) applied to p, required to be a constant.
inline FieldElem coefficient_functional(const BiPoly& p, int m, int n) {
    BiPoly d = p.derivative(m, n);
    if (d.degree() > 0) throw std::invalid_argument("derivative functional applied above its degree");
    return d.coeff(0, 0).scaled(Rational(1) / (factorial(m) * factorial(n)));
}

enum class RepId {
    SectPlus,
    SectMinus,
    RadPlus,
    RadMinus,
    RowPlus,  // a_{.,0}^+
    RowMinus,
    ColPlus,  // a_{0,.}^+
    ColMinus,
    RadPosition,
    RowPosition,        // structured display, normalised a_sect^+
    RowPositionScaled,  // same with sqrt10 * a_sect^+
    ColPosition,
    ColPositionScaled,
    ColPositionScaledBar,  // sqrt10 * a_sect^- with Zb in the middle term
    RowPositionLong,
    ColPositionLong,
};

inline const std::vector<RepId>& all_reps() {
    static const std::vector<RepId> reps{
        RepId::SectPlus,          RepId::SectMinus,        RepId::RadPlus,         RepId::RadMinus,
        RepId::RowPlus,           RepId::RowMinus,         RepId::ColPlus,         RepId::ColMinus,
        RepId::RadPosition,       RepId::RowPosition,      RepId::RowPositionScaled, RepId::ColPosition,
        RepId::ColPositionScaled, RepId::ColPositionScaledBar, RepId::RowPositionLong, RepId::ColPositionLong};
    return reps;
}

inline std::string rep_name(RepId r) {
    switch (r) {
        case RepId::SectPlus: return "a_sect+";
        case RepId::SectMinus: return "a_sect-";
        case RepId::RadPlus: return "a_rad+";
        case RepId::RadMinus: return "a_rad-";
        case RepId::RowPlus: return "a_row+";
        case RepId::RowMinus: return "a_row-";
        case RepId::ColPlus: return "a_col+";
        case RepId::ColMinus: return "a_col-";
        case RepId::RadPosition: return "rad_position";
        case RepId::RowPosition: return "row_position";
        case RepId::RowPositionScaled: return "row_position_sqrt10";
        case RepId::ColPosition: return "col_position";
        case RepId::ColPositionScaled: return "col_position_sqrt10";
        case RepId::ColPositionScaledBar: return "col_position_sqrt10_zb";
        case RepId::RowPositionLong: return "row_position_long";
        case RepId::ColPositionLong: return "col_position_long";
    }
    return "?";
}

class DiffReps {
public:
    explicit DiffReps(const PolyTable& table) : t_(table) {}

    /// Throws unless p lies in span{U_{k,l} : k+l = N}.
    void require_level(const BiPoly& p, int n) const {
        for (const auto& [kl, c] : t_.expand(p)) {
            if (kl.first + kl.second != n) throw std::invalid_argument("polynomial is not in the degree-N span");
        }
    }

    /// sum_m U_{m+dk, N-m+dl} D_{m,N-m}/(m!(N-m)!) p, for p at level N.
    [[nodiscard]] BiPoly ladder_block(const BiPoly& p, int n, int dk, int dl) const {
        BiPoly out;
        for (int m = 0; m <= n; ++m) {
            FieldElem c = coefficient_functional(p, m, n - m);
            if (!c.is_zero()) out += t_.get(m + dk, n - m + dl).scaled(c);
        }
        return out;
    }

    /// Apply a level-wise block to each graded component of p.
    [[nodiscard]] BiPoly graded(const BiPoly& p, const std::function<BiPoly(const BiPoly&, int)>& block) const {
        std::map<int, std::map<std::pair<int, int>, FieldElem>> levels;
        for (const auto& [kl, c] : t_.expand(p)) levels[kl.first + kl.second][kl] = c;
        BiPoly out;
        for (const auto& [n, comp] : levels) out += block(t_.combine(comp), n);
        return out;
    }

    [[nodiscard]] BiPoly sect(const BiPoly& p, int sign) const {
        return graded(p, [&](const BiPoly& q, int n) {
            if (n < 1) return BiPoly();
            return ladder_block(q, n, -sign, sign).scaled(inv_sqrt10());
        });
    }

    [[nodiscard]] BiPoly apply(RepId rep, const BiPoly& p, int n) const {
        require_level(p, n);
        const BiPoly z = BiPoly::z();
        const BiPoly zb = BiPoly::zb();
        switch (rep) {
            case RepId::SectPlus:
            case RepId::SectMinus: {
                int s = rep == RepId::SectPlus ? 1 : -1;
                if (n < 1) return BiPoly();
                return ladder_block(p, n, -s, s).scaled(inv_sqrt10());
            }
            case RepId::RadPlus:
            case RepId::RadMinus: {
                int s = rep == RepId::RadPlus ? 1 : -1;
                return ladder_block(p, n, s, s).scaled(FieldElem::sqrt_of(Rational(2, 5)));
            }
            case RepId::RowPlus:
            case RepId::RowMinus: {
                int s = rep == RepId::RowPlus ? 1 : -1;
                FieldElem c = coefficient_functional(p, n, 0);
                return t_.get(n + s, 0).scaled(c);
            }
            case RepId::ColPlus:
            case RepId::ColMinus: {
                int s = rep == RepId::ColPlus ? 1 : -1;
                FieldElem c = coefficient_functional(p, 0, n);
                return t_.get(0, n + s).scaled(c);
            }
            case RepId::RadPosition: {
                BiPoly out = (z * zb - BiPoly(FieldElem(3))) * p;
                if (n >= 1) {
                    BiPoly bracket;
                    for (int m = 0; m <= n; ++m) {
                        Rational f = Rational(1) / (factorial(m) * factorial(n - m));
                        BiPoly a1 = t_.get(m - 1, n - m + 1) * (zb * p).derivative(m, n - m) +
                                    t_.get(m + 1, n - m - 1) * (z * p).derivative(m, n - m);
                        bracket += a1.scaled(f);
                    }
                    for (int m = 0; m <= n - 1; ++m) {
                        Rational f = Rational(1) / (factorial(m) * factorial(n - m));
                        BiPoly a2 = t_.get(m, n - m) * p.derivative(m, n - m) +
                                    t_.get(n - m, m) * p.derivative(n - m, m);
                        bracket -= a2.scaled(f);
                    }
                    out -= bracket;
                }
                return out.scaled(FieldElem::sqrt_of(Rational(2, 5)));
            }
            case RepId::RowPosition:
            case RepId::RowPositionScaled: {
                FieldElem s = rep == RepId::RowPositionScaled ? FieldElem::sqrt10() : FieldElem(1);
                auto b = [&](const BiPoly& q) { return sect(q, +1).scaled(s); };
                BiPoly q = project_row(p);
                return z * q + zb * q - b(q) - b(z * q) + b(b(q));
            }
            case RepId::ColPosition:
            case RepId::ColPositionScaled:
            case RepId::ColPositionScaledBar: {
                FieldElem s = rep == RepId::ColPosition ? FieldElem(1) : FieldElem::sqrt10();
                auto c = [&](const BiPoly& q) { return sect(q, -1).scaled(s); };
                BiPoly q = project_col(p);
                BiPoly mid = rep == RepId::ColPositionScaledBar ? zb * q : z * q;
                return z * q + zb * q - c(q) - c(mid) + c(c(q));
            }
            case RepId::RowPositionLong:
            case RepId::ColPositionLong: {
                bool row = rep == RepId::RowPositionLong;
                BiPoly q = row ? project_row(p) : project_col(p);
                BiPoly bracket;
                if (n >= 1) {
                    BiPoly shifted = q + (row ? z : zb) * q;
                    bracket += graded(shifted, [&](const BiPoly& x, int lev) {
                        if (lev < 1) return BiPoly();
                        return row ? ladder_block(x, lev, -1, 1) : ladder_block(x, lev, 1, -1);
                    });
                    for (int m = 0; m <= n - 2; ++m) {
                        if (row) {
                            FieldElem c = coefficient_functional(q, m + 2, n - m - 2);
                            bracket -= t_.get(m, n - m).scaled(c);
                        } else {
                            FieldElem c = coefficient_functional(q, m, n - m);
                            bracket -= t_.get(m + 2, n - m - 2).scaled(c);
                        }
                    }
                }
                return z * p + zb * p - bracket.scaled(inv_sqrt10());
            }
        }
        throw std::invalid_argument("unknown representation");
    }

    /// Basis-action image of U_{k,l} under the operator the representation is meant to equal.
    [[nodiscard]] BiPoly target_action(RepId rep, int k, int l) const {
        auto u = [&](int a, int b) { return t_.get(a, b); };
        const FieldElem r = FieldElem::sqrt_of(Rational(2, 5));
        switch (rep) {
            case RepId::SectPlus: return u(k - 1, l + 1).scaled(inv_sqrt10());
            case RepId::SectMinus: return u(k + 1, l - 1).scaled(inv_sqrt10());
            case RepId::RadPlus: return u(k + 1, l + 1).scaled(r);
            case RepId::RadMinus: return u(k - 1, l - 1).scaled(r);
            case RepId::RowPlus: return l == 0 ? u(k + 1, 0) : BiPoly();
            case RepId::RowMinus: return l == 0 ? u(k - 1, 0) : BiPoly();
            case RepId::ColPlus: return k == 0 ? u(0, l + 1) : BiPoly();
            case RepId::ColMinus: return k == 0 ? u(0, l - 1) : BiPoly();
            case RepId::RadPosition: return (u(k + 1, l + 1) + u(k - 1, l - 1)).scaled(r);
            case RepId::RowPosition:
            case RepId::RowPositionScaled:
            case RepId::RowPositionLong: return l == 0 ? u(k + 1, 0) + u(k - 1, 0) : BiPoly();
            case RepId::ColPosition:
            case RepId::ColPositionScaled:
            case RepId::ColPositionScaledBar:
            case RepId::ColPositionLong: return k == 0 ? u(0, l + 1) + u(0, l - 1) : BiPoly();
        }
        return BiPoly();
    }

private:
    static FieldElem inv_sqrt10() { return FieldElem::sqrt10().scaled(Rational(1, 10)); }

    [[nodiscard]] BiPoly project_row(const BiPoly& p) const {
        std::map<std::pair<int, int>, FieldElem> keep;
        for (const auto& [kl, c] : t_.expand(p)) {
            if (kl.second == 0) keep[kl] = c;
        }
        return t_.combine(keep);
    }
    [[nodiscard]] BiPoly project_col(const BiPoly& p) const {
        std::map<std::pair<int, int>, FieldElem> keep;
        for (const auto& [kl, c] : t_.expand(p)) {
            if (kl.first == 0) keep[kl] = c;
        }
        return t_.combine(keep);
    }

    const PolyTable& t_;
};

enum class KernelKind { Sectorial, Radial };

/// Partial sum over k+l <= cutoff of phase(k+l) conj(U_{k,l}(z)) U_{k,l}(zeta).
inline std::complex<double> poisson_kernel(const PolyTable& t, KernelKind kind, std::complex<double> z,
                                           std::complex<double> zeta, int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("cutoff must be >= 0");
    if (cutoff > t.max_degree()) throw std::out_of_range("cutoff exceeds polynomial table");
    std::complex<double> acc = 0;
    for (int n = 0; n <= cutoff; ++n) {
        std::complex<double> phase = kind == KernelKind::Sectorial
                                         ? std::complex<double>(n % 2 == 0 ? 1.0 : -1.0, 0.0)
                                         : std::polar(1.0, std::numbers::pi * n / 4.0);
        for (int k = 0; k <= n; ++k) {
            const BiPoly& u = t.get(k, n - k);
            acc += phase * std::conj(u.evaluate(z)) * u.evaluate(zeta);
        }
    }
    return acc;
}

}  // namespace chk
