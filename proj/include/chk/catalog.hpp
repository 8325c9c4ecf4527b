#pragma once

// Named operators of the ChK oscillator, built from basis actions and, where
// available, from their constructor definitions.

#include "chk/chk_poly.hpp"
#include "chk/fock.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace chk {

enum class Form { Basis, Constructor };

struct GeneratorId {
    std::string name;
    std::vector<int> ints;
    std::vector<FieldElem> scalars;

    [[nodiscard]] std::string key() const {
        std::ostringstream os;
        os << name;
        if (!ints.empty() || !scalars.empty()) {
            os << '(';
            bool first = true;
            for (int v : ints) {
                os << (first ? "" : ",") << v;
                first = false;
            }
            for (const auto& s : scalars) {
                os << (first ? "" : ",") << s.to_string();
                first = false;
            }
            os << ')';
        }
        return os.str();
    }
};

inline GeneratorId gen(std::string name, std::vector<int> ints = {}, std::vector<FieldElem> scalars = {}) {
    return GeneratorId{std::move(name), std::move(ints), std::move(scalars)};
}

class UnknownGenerator : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CatalogEntry {
    std::string name;
    int n_ints;      // integer parameters
    int n_scalars;   // field parameters
    bool has_constructor;
    std::string ref;  // short provenance text
    std::vector<int> sample_ints;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> e{
        {"I", 0, 0, false, "identity", {}},
        {"Z", 0, 0, true, "position operator; constructor = multiplication by z", {}},
        {"Zb", 0, 0, true, "conjugate position operator; constructor = multiplication by zb", {}},
        {"Ks", 0, 0, false, "sectorial kernel phase (-1)^{k+l}", {}},
        {"Kr", 0, 0, false, "radial kernel phase e^{i pi (k+l)/4}", {}},
        {"Zd", 0, 0, true, "momentum Z^dag; constructor = Ks^-1 Z Ks", {}},
        {"Zbd", 0, 0, true, "momentum Zb^dag; constructor = Ks^-1 Zb Ks", {}},
        {"as", 1, 0, true, "sectorial ladder a_s^{+/-}; constructor = (Z+Z^dag)/sqrt40", {1}},
        {"N1", 0, 0, false, "number operator k", {}},
        {"N2", 0, 0, false, "number operator l", {}},
        {"P1", 0, 0, false, "projector onto U_{N,0}", {}},
        {"P2", 0, 0, false, "projector onto U_{0,N}", {}},
        {"X", 0, 0, true, "radial position -5H_s - (1/2)(Z^2+Zb^2)", {}},
        {"Xd", 0, 0, true, "radial momentum Kr^-1 X Kr", {}},
        {"Hs", 0, 0, true, "sectorial Hamiltonian; basis = ladder form, constructor = Z form", {}},
        {"Hr", 0, 0, true, "radial Hamiltonian; basis = ladder form with I_B(1/8,1/2), constructor = (X^2+(X^*)^2)/4", {}},
        {"IB", 0, 2, false, "auxiliary diagonal I_B(alpha,beta)", {}},
        {"ar", 1, 0, true, "radial ladder a_r^{+/-}; constructor = (X+iX^dag)/sqrt10 - (2/sqrt5) I_B", {1}},
        {"ab0", 1, 0, false, "boundary ladder along U_{m,0}", {1}},
        {"a0b", 1, 0, false, "boundary ladder along U_{0,m}", {1}},
        {"Hb0", 0, 0, false, "row boundary Hamiltonian", {}},
        {"H0b", 0, 0, false, "column boundary Hamiltonian", {}},
        {"H0", 0, 0, false, "boundary Hamiltonian (1/5)(H_row + H_col - P^{00}_{00})", {}},
        {"P", 4, 0, false, "matrix unit P^{m,n}_{s,t}", {1, 0, 0, 1}},
        {"Pbk", 2, 0, false, "row series P^{(n)}_{.,k}", {1, 0}},
        {"Pkb", 2, 0, false, "column series P^{(q)}_{p,.}", {1, 0}},
        {"Rl", 3, 0, false, "radial series P^k_{+/-,l} (sum over m >= 0)", {1, 1, 0}},
        {"Rr", 3, 0, false, "radial series P^k_{l,+/-} (sum over m >= 0)", {1, 1, 0}},
        {"HL", 4, 0, false, "hatted series sum_s P^{s+k,l}_{s+m,n}", {0, 0, 1, 0}},
        {"HR", 4, 0, false, "hatted series sum_s P^{k,s+l}_{m,s+n}", {0, 0, 0, 1}},
    };
    return e;
}

inline const CatalogEntry* find_entry(const std::string& name) {
    for (const auto& e : catalog_entries()) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

class Catalog {
public:
    explicit Catalog(int cutoff) : cutoff_(cutoff) {
        if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
    }

    [[nodiscard]] int cutoff() const { return cutoff_; }

    [[nodiscard]] bool has_form(const std::string& name, Form f) const {
        const auto* e = find_entry(name);
        if (!e) return false;
        return f == Form::Basis || e->has_constructor;
    }

    /// Memoized; safe under concurrent first access.
    [[nodiscard]] const SparseOp& build(const GeneratorId& id, Form form = Form::Basis) {
        std::string k = (form == Form::Basis ? "b:" : "c:") + id.key();
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = cache_.find(k);
            if (it != cache_.end()) return *it->second;
        }
        auto op = std::make_shared<const SparseOp>(make(id, form));
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = cache_.try_emplace(k, op);
        return *it->second;
    }

    [[nodiscard]] const SparseOp& build(const std::string& name, std::vector<int> ints = {}, Form form = Form::Basis) {
        return build(gen(name, std::move(ints)), form);
    }

    [[nodiscard]] const PolyTable& poly_table() {
        std::lock_guard<std::mutex> lock(mu_);
        if (!table_) table_ = std::make_unique<PolyTable>(cutoff_ + 1);
        return *table_;
    }

private:
    using Out = std::vector<std::tuple<int, int, FieldElem>>;

    static FieldElem inv_sqrt10() { return FieldElem::sqrt10().scaled(Rational(1, 10)); }

    static void check_arity(const GeneratorId& id, const CatalogEntry& e) {
        if (static_cast<int>(id.ints.size()) != e.n_ints || static_cast<int>(id.scalars.size()) != e.n_scalars) {
            throw std::invalid_argument("wrong parameter count for generator " + id.name);
        }
    }
    static int sign_param(const GeneratorId& id) {
        int e = id.ints.at(0);
        if (e != 1 && e != -1) throw std::invalid_argument("sign parameter must be +1 or -1 for " + id.name);
        return e;
    }

    SparseOp diag(const std::function<FieldElem(int, int)>& f) const {
        return SparseOp::from_transitions(cutoff_, [&](int k, int l, Out& out) { out.emplace_back(k, l, f(k, l)); });
    }

    SparseOp multiplication(bool by_z) {
        const PolyTable& t = poly_table();
        return SparseOp::from_transitions(cutoff_, [&](int k, int l, Out& out) {
            BiPoly p = (by_z ? BiPoly::z() : BiPoly::zb()) * t.get(k, l);
            for (const auto& [kl, c] : t.expand(p)) out.emplace_back(kl.first, kl.second, c);
        });
    }

    SparseOp ib(const FieldElem& alpha, const FieldElem& beta) const {
        return diag([&](int k, int l) {
            if (k == 0 && l == 0) return beta;
            if (k == 0 || l == 0) return alpha;
            return FieldElem(0);
        });
    }

    SparseOp make(const GeneratorId& id, Form form) {
        const CatalogEntry* e = find_entry(id.name);
        if (!e) throw UnknownGenerator("unknown generator: " + id.name);
        check_arity(id, *e);
        if (form == Form::Constructor && !e->has_constructor) {
            throw std::invalid_argument("generator has no constructor form: " + id.name);
        }
        const int C = cutoff_;
        const std::string& n = id.name;
        const auto& p = id.ints;
        bool ctor = form == Form::Constructor;

        if (n == "I") return SparseOp::identity(C);
        if (n == "Z" || n == "Zb") {
            if (ctor) return multiplication(n == "Z");
            bool z = n == "Z";
            return SparseOp::from_transitions(C, [z](int k, int l, Out& out) {
                if (z) {
                    out.emplace_back(k + 1, l, FieldElem(1));
                    out.emplace_back(k, l - 1, FieldElem(1));
                    out.emplace_back(k - 1, l + 1, FieldElem(1));
                } else {
                    out.emplace_back(k, l + 1, FieldElem(1));
                    out.emplace_back(k - 1, l, FieldElem(1));
                    out.emplace_back(k + 1, l - 1, FieldElem(1));
                }
            });
        }
        if (n == "Ks") return diag([](int k, int l) { return FieldElem((k + l) % 2 == 0 ? 1 : -1); });
        if (n == "Kr") return diag([](int k, int l) { return FieldElem::eighth_root(k + l); });
        if (n == "Zd" || n == "Zbd") {
            bool z = n == "Zd";
            if (ctor) {
                const SparseOp& ks = build(gen("Ks"));
                return ks.adjoint() * build(gen(z ? "Z" : "Zb")) * ks;
            }
            return SparseOp::from_transitions(C, [z](int k, int l, Out& out) {
                if (z) {
                    out.emplace_back(k + 1, l, FieldElem(-1));
                    out.emplace_back(k, l - 1, FieldElem(-1));
                    out.emplace_back(k - 1, l + 1, FieldElem(1));
                } else {
                    out.emplace_back(k, l + 1, FieldElem(-1));
                    out.emplace_back(k - 1, l, FieldElem(-1));
                    out.emplace_back(k + 1, l - 1, FieldElem(1));
                }
            });
        }
        if (n == "as") {
            int s = sign_param(id);
            if (ctor) {
                FieldElem f = FieldElem::sqrt_of(Rational(1, 40));
                if (s > 0) return (build(gen("Z")) + build(gen("Zd"), Form::Constructor)).scaled(f);
                return (build(gen("Zb")) + build(gen("Zbd"), Form::Constructor)).scaled(f);
            }
            return SparseOp::from_transitions(
                C, [s](int k, int l, Out& out) { out.emplace_back(k - s, l + s, inv_sqrt10()); });
        }
        if (n == "N1") return diag([](int k, int) { return FieldElem(k); });
        if (n == "N2") return diag([](int, int l) { return FieldElem(l); });
        if (n == "P1") return diag([](int, int l) { return FieldElem(l == 0 ? 1 : 0); });
        if (n == "P2") return diag([](int k, int) { return FieldElem(k == 0 ? 1 : 0); });
        if (n == "Hs") {
            if (ctor) {
                const SparseOp& z = build(gen("Z"));
                const SparseOp& zb = build(gen("Zb"));
                const SparseOp& zd = build(gen("Zd"), Form::Constructor);
                const SparseOp& zbd = build(gen("Zbd"), Form::Constructor);
                SparseOp h1 = z * zb + z * zbd + zd * zb + zd * zbd;
                SparseOp h2 = zb * z + zb * zd + zbd * z + zbd * zd;
                return (h1 + h2).scaled(FieldElem(Rational(1, 40)));
            }
            const SparseOp& ap = build(gen("as", {1}));
            const SparseOp& am = build(gen("as", {-1}));
            return ap * am + am * ap;
        }
        if (n == "X" || n == "Xd") {
            if (n == "Xd") {
                const SparseOp& kr = build(gen("Kr"));
                return kr.adjoint() * build(gen("X"), Form::Constructor) * kr;
            }
            const SparseOp& z = build(gen("Z"));
            const SparseOp& zb = build(gen("Zb"));
            SparseOp zs = z.adjoint();
            SparseOp zbs = zb.adjoint();
            SparseOp corr = z * zbs + zs * zb + zb * zs + zbs * z;
            return build(gen("Hs"), Form::Constructor).scaled(FieldElem(-5)) - corr.scaled(FieldElem(Rational(1, 4)));
        }
        if (n == "Hr") {
            if (ctor) {
                const SparseOp& x = build(gen("X"), Form::Constructor);
                SparseOp xs = x.adjoint();
                return (x * x + xs * xs).scaled(FieldElem(Rational(1, 4)));
            }
            const SparseOp& ap = build(gen("ar", {1}));
            const SparseOp& am = build(gen("ar", {-1}));
            return ap * am + am * ap + ib(FieldElem(Rational(1, 8)), FieldElem(Rational(1, 2)));
        }
        if (n == "IB") return ib(id.scalars[0], id.scalars[1]);
        if (n == "ar") {
            int s = sign_param(id);
            if (ctor) {
                const SparseOp& x = build(gen("X"), Form::Constructor);
                const SparseOp& xd = build(gen("Xd"), Form::Constructor);
                FieldElem w = FieldElem::eighth_root(s);
                SparseOp ibop = ib(w.scaled(Rational(1, 4)), w.scaled(Rational(1, 2)));
                return (x + xd.scaled(FieldElem::i())).scaled(inv_sqrt10()) -
                       ibop.scaled(FieldElem::sqrt5().scaled(Rational(2, 5)));
            }
            FieldElem c = FieldElem::sqrt_of(Rational(2, 5));
            return SparseOp::from_transitions(C, [s, c](int k, int l, Out& out) { out.emplace_back(k + s, l + s, c); });
        }
        if (n == "ab0" || n == "a0b") {
            int s = sign_param(id);
            bool row = n == "ab0";
            return SparseOp::from_transitions(C, [s, row](int k, int l, Out& out) {
                if (row && l == 0) out.emplace_back(k + s, 0, FieldElem(1));
                if (!row && k == 0) out.emplace_back(0, l + s, FieldElem(1));
            });
        }
        if (n == "Hb0" || n == "H0b") {
            std::string a = n == "Hb0" ? "ab0" : "a0b";
            const SparseOp& ap = build(gen(a, {1}));
            const SparseOp& am = build(gen(a, {-1}));
            return ap * am + am * ap;
        }
        if (n == "H0") {
            SparseOp s = build(gen("Hb0")) + build(gen("H0b")) - SparseOp::matrix_unit(C, 0, 0, 0, 0);
            return s.scaled(FieldElem(Rational(1, 5)));
        }
        if (n == "P") return SparseOp::matrix_unit(C, p[0], p[1], p[2], p[3]);
        if (n == "Pbk") {
            int nn = p[0];
            int k = p[1];
            // (j,k) -> (j+k-n, n)
            return series(C, [=](int a, int b, Out& out) {
                if (b == k) out.emplace_back(a + k - nn, nn, FieldElem(1));
            }, nn < 0 || k < 0, 0);
        }
        if (n == "Pkb") {
            int q = p[0];
            int pp = p[1];
            // (p,j) -> (q, j+p-q)
            return series(C, [=](int a, int b, Out& out) {
                if (a == pp) out.emplace_back(q, b + pp - q, FieldElem(1));
            }, q < 0 || pp < 0, 0);
        }
        if (n == "Rl" || n == "Rr") {
            int s = sign_param(id);
            int k = p[1];
            int l = p[2];
            bool left = n == "Rl";
            // Rl: (m+s*k, k) -> (m+s*l, l), m >= 0; Rr: (k, m+s*k) -> (l, m+s*l)
            return series(C, [=](int a, int b, Out& out) {
                if (left && b == k) {
                    int m = a - s * k;
                    if (m >= 0) out.emplace_back(m + s * l, l, FieldElem(1));
                }
                if (!left && a == k) {
                    int m = b - s * k;
                    if (m >= 0) out.emplace_back(l, m + s * l, FieldElem(1));
                }
            }, k < 0 || l < 0, (s + 1) * (l - k));
        }
        if (n == "HL" || n == "HR") {
            int k = p[0];
            int l = p[1];
            int m = p[2];
            int nn = p[3];
            bool left = n == "HL";
            // HL: (s+k, l) -> (s+m, n) over all integers s; HR: (k, s+l) -> (m, s+n).
            // Units with a negative index vanish, so only the unshifted pair can kill the series.
            return series(C, [=](int a, int b, Out& out) {
                if (left && b == l) out.emplace_back(a - k + m, nn, FieldElem(1));
                if (!left && a == k) out.emplace_back(m, b - l + nn, FieldElem(1));
            }, left ? (l < 0 || nn < 0) : (k < 0 || m < 0), (m - k) + (nn - l));
        }
        throw UnknownGenerator("unknown generator: " + n);
    }

    /// Shift-invariant series; every transition changes the degree by `delta`.
    static SparseOp series(int C, const SparseOp::TransitionFn& fn, bool vanishes, int delta) {
        if (vanishes) return SparseOp(C);
        SparseOp op = SparseOp::from_transitions(C, fn);
        op.set_raise(delta, delta);
        return op;
    }

    int cutoff_;
    std::mutex mu_;
    std::map<std::string, std::shared_ptr<const SparseOp>> cache_;
    std::unique_ptr<PolyTable> table_;
};

struct CrossCheckResult {
    std::string id;
    bool consistent = false;
    double residual = 0;
    int domain = 0;
    std::string first_difference;  // "k,l" of the first differing column, empty if none
    std::string status;
};

/// Compares the constructor form with the basis-action form on their common exact domain.
inline CrossCheckResult cross_check(Catalog& cat, const GeneratorId& id, const std::vector<std::string>& documented = {}) {
    const SparseOp& c = cat.build(id, Form::Constructor);
    const SparseOp& b = cat.build(id, Form::Basis);
    CrossCheckResult r;
    r.id = id.key();
    r.domain = std::min(c.effective_horizon(), b.effective_horizon());
    auto [eq, res] = c.equal_on_domain(b, r.domain);
    r.consistent = eq;
    r.residual = res;
    if (!eq) {
        SparseOp d = (c - b).restricted(r.domain);
        auto s = index_of(d.columns().front().src);
        r.first_difference = std::to_string(s.k) + "," + std::to_string(s.l);
    }
    bool doc = std::find(documented.begin(), documented.end(), id.name) != documented.end();
    r.status = eq ? "consistent" : (doc ? "inconsistent (documented)" : "inconsistent (new)");
    return r;
}

struct SpectrumRow {
    int k = 0;
    int l = 0;
    bool eigenvector = false;
    FieldElem computed;
    FieldElem printed;
    bool match = false;
    std::string residual;  // off-diagonal part of the column when not an eigenvector
};

/// Printed eigenvalue tables, keyed by corner / edge / interior.
inline FieldElem printed_eigenvalue(const std::string& h, int k, int l) {
    int cls = (k == 0 && l == 0) ? 0 : (k == 0 || l == 0) ? 1 : 2;
    if (h == "Hs") return FieldElem(std::array<Rational, 3>{Rational(0), Rational(1, 10), Rational(1, 5)}[cls]);
    if (h == "H0") return FieldElem(std::array<Rational, 3>{Rational(1, 5), Rational(2, 5), Rational(0)}[cls]);
    if (h == "Hr") return FieldElem(std::array<Rational, 3>{Rational(4, 5), Rational(1, 2), Rational(1, 5)}[cls]);
    throw std::invalid_argument("no printed spectrum for " + h);
}

inline std::vector<SpectrumRow> spectrum_check(Catalog& cat, const std::string& h, Form form = Form::Basis) {
    const SparseOp& op = cat.build(gen(h), form);
    int dom = op.effective_horizon();
    std::vector<SpectrumRow> rows;
    for (int s = 0; s < space_size(dom); ++s) {
        auto [k, l] = index_of(s);
        SpectrumRow r;
        r.k = k;
        r.l = l;
        StateVector v = op.apply(StateVector::basis(k, l));
        r.computed = v.at(k, l);
        StateVector off = v;
        off.add(k, l, -r.computed);
        r.eigenvector = off.empty();
        if (!r.eigenvector) {
            std::ostringstream os;
            for (const auto& [idx, c] : off.amplitudes()) os << idx.k << ',' << idx.l << ':' << c.to_string() << ';';
            r.residual = os.str();
        }
        r.printed = printed_eigenvalue(h, k, l);
        r.match = r.eigenvector && r.computed == r.printed;
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace chk
