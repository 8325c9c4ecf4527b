#pragma once

// Structural probes of the generated Lie algebra inside a finite window:
// center, diagonal commutant, bracket typing, derived spans and ideals,
// ideal closure in the matrix-unit window, the ad^2 identity and level ranks.

#include "chk/catalog.hpp"
#include "chk/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace chk {

enum class GenType { A, B, Cl, Cr, D };

inline std::string type_name(GenType t) {
    switch (t) {
        case GenType::A: return "A";
        case GenType::B: return "B";
        case GenType::Cl: return "Cl";
        case GenType::Cr: return "Cr";
        case GenType::D: return "D";
    }
    return "?";
}

/// Canonical members of a type. Hatted series only depend on the relative shift of the
/// bracketed index pair, so one of the two shifted indices is pinned to 0.
/// `bound` limits series indices; units range over k+l, m+n <= unit_window.
inline std::vector<GeneratorId> type_members(GenType t, int bound, int unit_window) {
    std::vector<GeneratorId> out;
    switch (t) {
        case GenType::A:
            for (const char* n : {"I", "N1", "N2"}) out.push_back(gen(n));
            break;
        case GenType::B:
            for (const char* n : {"as", "ar"})
                for (int e : {1, -1}) out.push_back(gen(n, {e}));
            break;
        case GenType::Cl:
        case GenType::Cr: {
            bool left = t == GenType::Cl;
            for (int d = -bound; d <= bound; ++d)
                for (int a = 0; a <= bound; ++a)
                    for (int b = 0; b <= bound; ++b) {
                        int lo = std::max(0, -d), hi = std::max(0, d);
                        if (left) out.push_back(gen("HL", {lo, a, hi, b}));
                        else out.push_back(gen("HR", {a, lo, b, hi}));
                    }
            break;
        }
        case GenType::D:
            for (int s = 0; s < space_size(unit_window); ++s)
                for (int r = 0; r < space_size(unit_window); ++r) {
                    auto [k, l] = index_of(s);
                    auto [m, n] = index_of(r);
                    out.push_back(gen("P", {k, l, m, n}));
                }
            break;
    }
    return out;
}

namespace detail {

inline void check_window(int cutoff, int window) {
    if (window < 2) throw std::invalid_argument("window must be >= 2");
    if (window + 4 > cutoff) throw std::invalid_argument("window + 4 must not exceed the cutoff");
}

inline std::string describe(const std::vector<GeneratorId>& ids, const SVec& combo) {
    std::ostringstream os;
    int shown = 0;
    for (const auto& [j, c] : combo) {
        if (shown++ == 6) {
            os << " + ...";
            break;
        }
        if (shown > 1) os << " + ";
        os << c.to_string() << "*" << ids[static_cast<std::size_t>(j)].key();
    }
    return os.str();
}

inline SparseOp combine(Catalog& cat, const std::vector<GeneratorId>& ids, const SVec& combo) {
    SparseOp acc(cat.cutoff());
    for (const auto& [j, c] : combo) acc = acc + cat.build(ids[static_cast<std::size_t>(j)]).scaled(c);
    return acc;
}

}  // namespace detail

enum class CenterFamily { Short, Full, N1Only };

struct CommutantResult {
    int dimension = 0;
    int candidates = 0;
    int dropped = 0;  // brackets not exact on the window
    std::vector<std::string> basis;
    std::vector<SparseOp> ops;
};

/// Exact solve of [z, X] = 0 for all X in `tests`, z ranging over the typed catalog span
/// with indices inside the window. Brackets are compared on columns of degree <= degree.
inline CommutantResult commutant(Catalog& cat, int window, int degree, const std::vector<SparseOp>& tests,
                                 const std::vector<GeneratorId>& cands) {
    CommutantResult r;
    std::vector<GeneratorId> kept;
    LinearSpan brackets;
    std::vector<SVec> kernel;
    for (const auto& id : cands) {
        const SparseOp& g = cat.build(id);
        if (g.effective_horizon() < degree) {
            ++r.dropped;
            continue;
        }
        SVec v;
        bool exact = true;
        for (std::size_t x = 0; x < tests.size() && exact; ++x) {
            SparseOp b = commutator(g, tests[x]);
            if (b.effective_horizon() < degree) exact = false;
            for (auto& [k, c] : to_svec(b, degree, static_cast<std::int64_t>(x))) v.emplace(k, c);
        }
        if (!exact) {
            ++r.dropped;
            continue;
        }
        auto label = static_cast<std::int64_t>(kept.size());
        kept.push_back(id);
        if (auto combo = brackets.insert_tracked(std::move(v), label)) kernel.push_back(std::move(*combo));
    }
    r.candidates = static_cast<int>(kept.size());
    // kernel elements that differ on the window are the commutant
    LinearSpan seen;
    for (const auto& combo : kernel) {
        SparseOp z = detail::combine(cat, kept, combo);
        if (seen.insert(to_svec(z, degree))) {
            r.basis.push_back(detail::describe(kept, combo));
            r.ops.push_back(z.restricted(degree));
        }
    }
    r.dimension = seen.rank();
    return r;
}

inline std::vector<GeneratorId> window_candidates(int window) {
    std::vector<GeneratorId> c;
    for (GenType t : {GenType::A, GenType::B, GenType::Cl, GenType::Cr, GenType::D}) {
        auto m = type_members(t, window, window);
        c.insert(c.end(), m.begin(), m.end());
    }
    return c;
}

inline std::vector<SparseOp> diagonal_units(Catalog& cat, int window) {
    std::vector<SparseOp> out;
    for (int s = 0; s < space_size(window); ++s) {
        auto [k, l] = index_of(s);
        out.push_back(cat.build("P", {k, l, k, l}));
    }
    return out;
}

inline CommutantResult center_dimension(int cutoff, int window, CenterFamily family = CenterFamily::Full,
                                        bool empty_candidates = false) {
    detail::check_window(cutoff, window);
    Catalog cat(cutoff);
    std::vector<SparseOp> tests;
    if (family == CenterFamily::N1Only) {
        tests.push_back(cat.build("N1"));
    } else {
        tests = diagonal_units(cat, window);
        tests.push_back(cat.build("as", {1}));
        if (family == CenterFamily::Full) {
            tests.push_back(cat.build("as", {-1}));
            tests.push_back(cat.build("ar", {1}));
            tests.push_back(cat.build("ar", {-1}));
        }
    }
    // two levels beyond the window, so series tails cannot imitate the identity at its edge
    return commutant(cat, window, window + 2, tests, empty_candidates ? std::vector<GeneratorId>{} : window_candidates(window));
}

struct AbelianReport {
    bool diagonals_commute = false;
    bool identities = false;  // I, N1, N2 as diagonal sums on the window
    bool commutant_diagonal = false;
    int commutant_dimension = 0;
    [[nodiscard]] bool passed() const { return diagonals_commute && identities && commutant_diagonal; }
};

inline AbelianReport maximal_abelian_check(int cutoff, int window) {
    detail::check_window(cutoff, window);
    Catalog cat(cutoff);
    AbelianReport r;
    auto diag = diagonal_units(cat, window);
    r.diagonals_commute = true;
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) r.diagonals_commute &= commutator(diag[i], diag[j]).is_zero();

    r.identities = true;
    for (const char* name : {"I", "N1", "N2"}) {
        SparseOp sum(cutoff);
        for (int s = 0; s < space_size(window); ++s) {
            auto [m, n] = index_of(s);
            int w = name[0] == 'I' ? 1 : name[1] == '1' ? m : n;
            if (w != 0) sum = sum + cat.build("P", {m, n, m, n}).scaled(FieldElem(w));
        }
        r.identities &= cat.build(name).restricted(window).same_entries(sum);
    }

    CommutantResult c = commutant(cat, window, window, diag, window_candidates(window));
    r.commutant_dimension = c.dimension;
    r.commutant_diagonal = true;
    for (const auto& z : c.ops)
        for (const auto& col : z.columns())
            for (const auto& e : col.entries) r.commutant_diagonal &= e.tgt == col.src;
    return r;
}

/// Span of typed members, compared on columns of degree <= degree; members not exact there are left out.
class TypedSpan {
public:
    TypedSpan(Catalog& cat, const std::vector<GenType>& types, int degree, int bound, int unit_window)
        : degree_(degree) {
        for (GenType t : types) {
            for (const auto& id : type_members(t, bound, unit_window)) {
                const SparseOp& op = cat.build(id);
                if (op.effective_horizon() < degree) continue;
                span_.insert(to_svec(op, degree));
            }
        }
    }

    /// Empty when op lies in the span; otherwise the unexplained part.
    [[nodiscard]] SVec residual(const SparseOp& op) const { return span_.reduce(to_svec(op, degree_)); }

    [[nodiscard]] int rank() const { return span_.rank(); }

private:
    int degree_;
    LinearSpan span_;
};

inline std::string svec_entry(const SVec& v, int cutoff) {
    if (v.empty()) return "";
    const std::int64_t s = space_size(cutoff);
    auto key = v.begin()->first;
    auto src = index_of(static_cast<int>((key / s) % s));
    auto tgt = index_of(static_cast<int>(key % s));
    return std::to_string(src.k) + "," + std::to_string(src.l) + " -> " + std::to_string(tgt.k) + "," +
           std::to_string(tgt.l) + " : " + v.begin()->second.to_string();
}

/// Settings shared by the bracket-typing probes.
struct ProbeConfig {
    int cutoff = 16;
    int degree = 8;        // columns compared
    int sample_bound = 2;  // indices of sampled generators
    int span_bound = 4;    // series indices in membership spans
    int unit_window = 6;   // units in membership spans
};

struct TypeRule {
    GenType a, b;
    std::vector<GenType> claimed;  // empty: bracket vanishes
};

inline const std::vector<TypeRule>& type_rules() {
    using G = GenType;
    static const std::vector<TypeRule> rules{
        {G::A, G::A, {}},           {G::A, G::B, {G::B}},          {G::A, G::Cl, {G::Cl}},
        {G::A, G::Cr, {G::Cr}},     {G::A, G::D, {G::D}},          {G::B, G::B, {G::Cl, G::Cr, G::D}},
        {G::B, G::Cl, {G::Cl}},     {G::B, G::Cr, {G::Cr}},        {G::B, G::D, {G::D}},
        {G::Cl, G::Cl, {G::Cl}},    {G::Cr, G::Cr, {G::Cr}},       {G::Cl, G::Cr, {G::D}},
        {G::Cl, G::D, {G::D}},      {G::Cr, G::D, {G::D}},         {G::D, G::D, {G::D}},
    };
    return rules;
}

struct TypeRow {
    std::string pair;
    std::string claimed;
    int checked = 0;
    int in_span = 0;
    int in_span_with_units = 0;
    int skipped = 0;
    std::vector<std::string> offending;
};

struct TypeClosureReport {
    std::vector<TypeRow> rows;
    int checked = 0;
    int in_span = 0;
    [[nodiscard]] bool passed() const { return in_span == checked && checked > 0; }
};

inline TypeClosureReport type_closure_check(int samples_per_rule = 8, std::uint64_t seed = 7, ProbeConfig cfg = {}) {
    Catalog cat(cfg.cutoff);
    std::mt19937_64 rng(seed);
    TypeClosureReport rep;
    auto pick = [&](GenType t) {
        auto pool = type_members(t, cfg.sample_bound, cfg.sample_bound);
        return pool[rng() % pool.size()];
    };
    for (const auto& rule : type_rules()) {
        TypeRow row;
        row.pair = "[" + type_name(rule.a) + "," + type_name(rule.b) + "]";
        for (GenType t : rule.claimed) row.claimed += (row.claimed.empty() ? "" : "+") + type_name(t);
        if (row.claimed.empty()) row.claimed = "0";
        TypedSpan claimed(cat, rule.claimed, cfg.degree, cfg.span_bound, cfg.unit_window);
        auto with_units = rule.claimed;
        if (std::find(with_units.begin(), with_units.end(), GenType::D) == with_units.end()) with_units.push_back(GenType::D);
        TypedSpan relaxed(cat, with_units, cfg.degree, cfg.span_bound, cfg.unit_window);
        for (int attempt = 0; row.checked < samples_per_rule && attempt < 50 * samples_per_rule; ++attempt) {
            GeneratorId x = pick(rule.a), y = pick(rule.b);
            SparseOp b = commutator(cat.build(x), cat.build(y));
            if (b.effective_horizon() < cfg.degree) {
                ++row.skipped;
                continue;
            }
            ++row.checked;
            SVec res = claimed.residual(b);
            if (res.empty()) {
                ++row.in_span;
            } else if (row.offending.size() < 3) {
                row.offending.push_back(x.key() + " " + y.key() + " | " + svec_entry(res, cfg.cutoff));
            }
            if (relaxed.residual(b).empty()) ++row.in_span_with_units;
        }
        rep.checked += row.checked;
        rep.in_span += row.in_span;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

struct SpanClaim {
    std::string name;
    int checked = 0;
    int held = 0;
    std::string first_failure;
    [[nodiscard]] bool holds() const { return checked > 0 && held == checked; }
};

/// Subspace names follow the section defining them: A3L is spanned by the column-type
/// hatted series (HR) and A3R by the row-type ones (HL).
inline std::vector<SpanClaim> derived_spans(std::uint64_t seed = 11, int samples_per_type = 6, ProbeConfig cfg = {}) {
    using G = GenType;
    Catalog cat(cfg.cutoff);
    std::mt19937_64 rng(seed);
    std::map<G, std::vector<GeneratorId>> samples;
    for (G t : {G::A, G::B, G::Cl, G::Cr, G::D}) {
        auto pool = type_members(t, cfg.sample_bound, cfg.sample_bound);
        std::shuffle(pool.begin(), pool.end(), rng);
        if (static_cast<int>(pool.size()) > samples_per_type) pool.resize(static_cast<std::size_t>(samples_per_type));
        samples[t] = pool;
    }
    auto members = [&](const std::vector<G>& ts) {
        std::vector<GeneratorId> out;
        for (G t : ts) out.insert(out.end(), samples[t].begin(), samples[t].end());
        return out;
    };
    const std::vector<G> all{G::A, G::B, G::Cl, G::Cr, G::D};
    const std::vector<G> A1{G::A}, A4{G::D};
    const std::vector<G> B2{G::B, G::Cl, G::Cr, G::D}, B3{G::Cl, G::Cr, G::D};
    const std::vector<G> B2L{G::B, G::Cr, G::D}, B2R{G::B, G::Cl, G::D};
    const std::vector<G> B3L{G::Cr, G::D}, B3R{G::Cl, G::D};
    const std::vector<G> B1L{G::B, G::Cr}, B1R{G::B, G::Cl};

    std::vector<SpanClaim> out;
    auto claim = [&](const std::string& name, const std::vector<G>& left, const std::vector<G>& right,
                     const std::vector<G>& target) {
        SpanClaim c{name};
        TypedSpan span(cat, target, cfg.degree, cfg.span_bound, cfg.unit_window);
        for (const auto& x : members(left))
            for (const auto& y : members(right)) {
                SparseOp b = commutator(cat.build(x), cat.build(y));
                if (b.effective_horizon() < cfg.degree) continue;
                ++c.checked;
                SVec res = span.residual(b);
                if (res.empty()) ++c.held;
                else if (c.first_failure.empty()) c.first_failure = x.key() + " " + y.key() + " | " + svec_entry(res, cfg.cutoff);
            }
        out.push_back(c);
    };
    claim("[A1,A1] = 0", A1, A1, {});
    claim("A^(1) in B2", all, all, B2);
    claim("A^(2) in B3", B2, B2, B3);
    claim("[B3,B3] in B3", B3, B3, B3);
    claim("B2L ideal", all, B2L, B2L);
    claim("B2R ideal", all, B2R, B2R);
    claim("B3L ideal", all, B3L, B3L);
    claim("B3R ideal", all, B3R, B3R);
    claim("A4 ideal", all, A4, A4);
    claim("A = A1 + B2: [B2,B2] in B2", B2, B2, B2);
    claim("A = A1 + B2: [A1,B2] in B2", A1, B2, B2);
    claim("AL = A1 + B2L: [B2L,B2L] in B2L", B2L, B2L, B2L);
    claim("AR = A1 + B2R: [B2R,B2R] in B2R", B2R, B2R, B2R);
    claim("B2L = B1L + A4: [B1L,B1L] in B1L", B1L, B1L, B1L);
    claim("B2R = B1R + A4: [B1R,B1R] in B1R", B1R, B1R, B1R);
    claim("B2L = B1L + A4: [B1L,A4] in A4", B1L, A4, A4);
    claim("B2R = B1R + A4: [B1R,A4] in A4", B1R, A4, A4);
    return out;
}

// ---- ideal closure inside the matrix-unit window ----

/// Window coordinates: key = tgt * n + src over the n states of degree <= window.
using WVec = BasicSVec<Rational>;

inline int window_states(int window) { return space_size(window); }

inline WVec window_unit(int window, int k, int l, int m, int n, const Rational& c = Rational(1)) {
    if (k < 0 || l < 0 || m < 0 || n < 0 || k + l > window || m + n > window) return {};
    const std::int64_t s = window_states(window);
    return {{slot_of(m, n) * s + slot_of(k, l), c}};
}

/// h_{m,0}, h_{0,n} are boundary diagonal units; interior ones are differences along the diagonal.
inline WVec window_h(int window, int m, int n) {
    if (m == 0 || n == 0) return window_unit(window, m, n, m, n);
    WVec v = window_unit(window, m, n, m, n);
    axpy(v, Rational(-1), window_unit(window, m - 1, n - 1, m - 1, n - 1));
    return v;
}

inline WVec to_window(const SparseOp& op, int window) {
    const std::int64_t s = window_states(window);
    WVec v;
    for (const auto& col : op.columns()) {
        for (const auto& e : col.entries) {
            if (index_of(col.src).degree() > window || index_of(e.tgt).degree() > window)
                throw std::invalid_argument("seed leaves the window");
            if (!e.c.is_rational()) throw std::invalid_argument("seed coefficients must be rational");
            v[e.tgt * s + col.src] = e.c[0];
        }
    }
    return v;
}

struct ClosureResult {
    int dimension = 0;
    int window_dimension = 0;
    [[nodiscard]] bool full() const { return dimension == window_dimension; }
};

/// Smallest subspace containing the seeds and closed under brackets with every window unit.
/// The h-basis lies in the span of the units, so bracketing with units suffices.
inline ClosureResult ideal_closure(const std::vector<WVec>& seeds, int window) {
    const int n = window_states(window);
    ClosureResult r;
    r.window_dimension = n * n;
    BasicSpan<Rational> span;
    std::deque<WVec> queue;
    bool traced = false;
    for (const auto& s : seeds) {
        Rational tr;
        for (const auto& [k, c] : s)
            if (k / n == k % n) tr += c;
        traced |= !tr.is_zero();
        if (span.insert(s)) queue.push_back(s);
    }
    // brackets are traceless, so the closure never exceeds span(seeds) + sl
    const int bound = n * n - 1 + (traced ? 1 : 0);
    while (!queue.empty() && span.rank() < bound) {
        WVec v = std::move(queue.front());
        queue.pop_front();
        std::set<int> rows, cols;
        for (const auto& [k, c] : v) {
            rows.insert(static_cast<int>(k / n));
            cols.insert(static_cast<int>(k % n));
        }
        // [E_ab, v] = E_a (row b of v) - (column a of v) E_b, with E_ab: b -> a
        for (int a = 0; a < n && span.rank() < bound; ++a) {
            for (int b = 0; b < n && span.rank() < bound; ++b) {
                if (!rows.count(b) && !cols.count(a)) continue;
                WVec w;
                for (const auto& [k, c] : v) {
                    auto t = static_cast<int>(k / n), s = static_cast<int>(k % n);
                    if (t == b) axpy(w, c, WVec{{static_cast<std::int64_t>(a) * n + s, Rational(1)}});
                    if (s == a) axpy(w, -c, WVec{{static_cast<std::int64_t>(t) * n + b, Rational(1)}});
                }
                if (!w.empty() && span.insert(w)) queue.push_back(std::move(w));
            }
        }
    }
    r.dimension = span.rank();
    return r;
}

struct SeedSweep {
    int seeds = 0;
    int full = 0;
    int min_dimension = 0;
    int window_dimension = 0;
    std::vector<std::string> short_examples;  // seeds whose closure misses the window
};

/// Every element of the standard basis (off-diagonal units and the h-basis) as a single seed.
inline SeedSweep ideal_closure_all_seeds(int window) {
    SeedSweep sw;
    std::vector<std::pair<std::string, WVec>> seeds;
    const int n = window_states(window);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            if (s == t) continue;
            auto [k, l] = index_of(s);
            auto [m, q] = index_of(t);
            seeds.emplace_back("P(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(m) + "," +
                                   std::to_string(q) + ")",
                               window_unit(window, k, l, m, q));
        }
    for (int m = 0; m <= window; ++m) seeds.emplace_back("h(" + std::to_string(m) + ",0)", window_h(window, m, 0));
    for (int q = 1; q <= window; ++q) seeds.emplace_back("h(0," + std::to_string(q) + ")", window_h(window, 0, q));
    for (int m = 0; m <= window; ++m)
        for (int q = 0; m + q + 2 <= window; ++q)
            seeds.emplace_back("h(" + std::to_string(m + 1) + "," + std::to_string(q + 1) + ")", window_h(window, m + 1, q + 1));
    sw.window_dimension = n * n;
    sw.min_dimension = n * n;
    for (const auto& [name, v] : seeds) {
        ClosureResult c = ideal_closure({v}, window);
        ++sw.seeds;
        if (c.full()) ++sw.full;
        else if (sw.short_examples.size() < 4) sw.short_examples.push_back(name + " -> " + std::to_string(c.dimension));
        sw.min_dimension = std::min(sw.min_dimension, c.dimension);
    }
    return sw;
}

// ---- ad^2 identity ----

struct AdSquareResult {
    bool holds = false;
    FieldElem alpha;
};

/// X = P^{s,t}_{u,v} with (u,v) != (s,t); checks ad_X^2 z = -2 alpha X, alpha the coefficient of P^{u,v}_{s,t} in z.
inline AdSquareResult ad_square_identity(int cutoff, int s, int t, int u, int v, const SparseOp& z) {
    if (s == u && t == v) throw std::invalid_argument("X must be off-diagonal");
    SparseOp x = SparseOp::matrix_unit(cutoff, s, t, u, v);
    SparseOp lhs = commutator(x, commutator(x, z));
    AdSquareResult r;
    r.alpha = z.coeff({u, v}, {s, t});
    r.holds = lhs.same_entries(x.scaled(r.alpha * FieldElem(-2)));
    return r;
}

struct AdSquareSweep {
    int instances = 0;
    int held = 0;
    int nonzero_alpha = 0;
};

inline AdSquareSweep ad_square_random(int instances, std::uint64_t seed, int window = 4, int cutoff = 10) {
    std::mt19937_64 rng(seed);
    const int n = space_size(window);
    AdSquareSweep sw;
    for (int i = 0; i < instances; ++i) {
        int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        int b = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
        if (b >= a) ++b;
        auto [s, t] = index_of(a);
        auto [u, v] = index_of(b);
        SparseOp z(cutoff);
        int terms = 1 + static_cast<int>(rng() % 6);
        for (int j = 0; j < terms; ++j) {
            auto [p, q] = index_of(static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
            auto [r2, w] = index_of(static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
            auto c = static_cast<std::int64_t>(rng() % 7) - 3;
            if (c != 0) z = z + SparseOp::matrix_unit(cutoff, p, q, r2, w, FieldElem(Rational(c)));
        }
        if (rng() % 2) z = z + SparseOp::matrix_unit(cutoff, u, v, s, t, FieldElem(Rational(1 + static_cast<std::int64_t>(rng() % 4))));
        auto res = ad_square_identity(cutoff, s, t, u, v, z);
        ++sw.instances;
        if (res.holds) ++sw.held;
        if (!res.alpha.is_zero()) ++sw.nonzero_alpha;
    }
    return sw;
}

// ---- sectorial level algebras ----

struct LevelDimension {
    int level = 0;
    int represented = 0;
    int formal = 0;
};

inline LevelDimension sectorial_level_dimension(int level, int cutoff) {
    if (level < 0 || level + 1 > cutoff) throw std::invalid_argument("level must satisfy 0 <= N < cutoff");
    Catalog cat(cutoff);
    LinearSpan s;
    for (const char* g : {"I", "N1", "N2"}) s.insert(to_svec(cat.build(g), cutoff));
    for (int k = 0; k <= level; ++k) {
        int l = level - k;
        s.insert(to_svec(cat.build("P", {k, l, k, l}), cutoff));
        s.insert(to_svec(cat.build("P", {k, l, k - 1, l + 1}), cutoff));
        s.insert(to_svec(cat.build("P", {k, l, k + 1, l - 1}), cutoff));
    }
    return {level, s.rank(), 3 * (level + 2)};
}

}  // namespace chk
