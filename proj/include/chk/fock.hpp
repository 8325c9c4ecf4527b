#pragma once

// Truncated Fock space {(k,l) : k,l >= 0, k+l <= cutoff} and exact sparse operators on it.
//
// Each operator records the degree-change bounds of its untruncated form and a
// horizon: the largest source degree whose column is known to be exact.

#include "chk/field.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace chk {

struct BasisIndex {
    int k = 0;
    int l = 0;
    [[nodiscard]] int degree() const { return k + l; }
    friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

inline int slot_of(int k, int l) {
    int n = k + l;
    return n * (n + 1) / 2 + l;
}
inline BasisIndex index_of(int slot) {
    int n = 0;
    while ((n + 1) * (n + 2) / 2 <= slot) ++n;
    int l = slot - n * (n + 1) / 2;
    return {n - l, l};
}
inline int space_size(int cutoff) { return (cutoff + 1) * (cutoff + 2) / 2; }

class StateVector {
public:
    using Amplitudes = std::map<BasisIndex, FieldElem>;

    StateVector() = default;
    static StateVector basis(int k, int l, const FieldElem& c = FieldElem(1)) {
        StateVector v;
        v.add(k, l, c);
        return v;
    }

    void add(int k, int l, const FieldElem& c) {
        if (c.is_zero()) return;
        auto [it, ins] = amp_.try_emplace(BasisIndex{k, l}, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) amp_.erase(it);
        }
    }

    [[nodiscard]] const Amplitudes& amplitudes() const { return amp_; }
    [[nodiscard]] bool empty() const { return amp_.empty(); }
    [[nodiscard]] bool truncated() const { return truncated_; }
    void mark_truncated() { truncated_ = true; }

    [[nodiscard]] FieldElem at(int k, int l) const {
        auto it = amp_.find(BasisIndex{k, l});
        return it == amp_.end() ? FieldElem(0) : it->second;
    }

    friend bool operator==(const StateVector& a, const StateVector& b) { return a.amp_ == b.amp_; }

private:
    Amplitudes amp_;
    bool truncated_ = false;
};

class SparseOp {
public:
    static constexpr int kInf = INT_MAX / 4;

    struct Entry {
        int tgt;
        FieldElem c;
    };
    struct Column {
        int src;
        std::vector<Entry> entries;
    };

    SparseOp() = default;
    explicit SparseOp(int cutoff) : cutoff_(cutoff) {
        if (cutoff < 0) throw std::invalid_argument("cutoff must be >= 0");
    }

    /// Untruncated transition function: source (k,l) -> list of ((k',l'), coeff).
    /// Targets with a negative index vanish; targets beyond the cutoff are dropped and lower the horizon.
    using TransitionFn = std::function<void(int, int, std::vector<std::tuple<int, int, FieldElem>>&)>;

    static SparseOp from_transitions(int cutoff, const TransitionFn& fn) {
        SparseOp op(cutoff);
        bool any = false;
        std::vector<std::tuple<int, int, FieldElem>> buf;
        int n_slots = space_size(cutoff);
        for (int s = 0; s < n_slots; ++s) {
            auto [k, l] = index_of(s);
            buf.clear();
            fn(k, l, buf);
            Column col{s, {}};
            for (auto& [tk, tl, c] : buf) {
                if (tk < 0 || tl < 0 || c.is_zero()) continue;
                int d = tk + tl - (k + l);
                if (!any) {
                    op.lo_ = op.hi_ = d;
                    any = true;
                } else {
                    op.lo_ = std::min(op.lo_, d);
                    op.hi_ = std::max(op.hi_, d);
                }
                if (tk + tl > cutoff) {
                    op.horizon_ = std::min(op.horizon_, k + l - 1);
                    continue;
                }
                col.entries.push_back({slot_of(tk, tl), std::move(c)});
            }
            normalize(col.entries);
            if (!col.entries.empty()) op.cols_.push_back(std::move(col));
        }
        return op;
    }

    static SparseOp identity(int cutoff) {
        return from_transitions(cutoff, [](int k, int l, auto& out) { out.emplace_back(k, l, FieldElem(1)); });
    }

    /// P^{m,n}_{s,t}: U_{m,n} -> U_{s,t}; zero if any index is negative.
    static SparseOp matrix_unit(int cutoff, int m, int n, int s, int t, const FieldElem& c = FieldElem(1)) {
        SparseOp op(cutoff);
        if (m < 0 || n < 0 || s < 0 || t < 0 || c.is_zero()) return op;
        op.lo_ = op.hi_ = s + t - m - n;
        if (m + n > cutoff) return op;
        if (s + t > cutoff) {
            op.horizon_ = m + n - 1;
            return op;
        }
        op.cols_.push_back(Column{slot_of(m, n), {Entry{slot_of(s, t), c}}});
        return op;
    }

    [[nodiscard]] int cutoff() const { return cutoff_; }
    [[nodiscard]] int horizon() const { return horizon_; }
    [[nodiscard]] int effective_horizon() const { return std::min(horizon_, cutoff_); }
    [[nodiscard]] int raise_lo() const { return lo_; }
    [[nodiscard]] int raise_hi() const { return hi_; }
    [[nodiscard]] const std::vector<Column>& columns() const { return cols_; }
    [[nodiscard]] bool is_zero() const { return cols_.empty(); }

    /// Max |change of k+l| over the untruncated transitions.
    [[nodiscard]] int reach() const { return std::max(std::abs(lo_), std::abs(hi_)); }

    /// Max |dk|+|dl| over the stored transitions.
    [[nodiscard]] int lattice_reach() const {
        int r = 0;
        for (const auto& col : cols_) {
            auto a = index_of(col.src);
            for (const auto& e : col.entries) {
                auto b = index_of(e.tgt);
                r = std::max(r, std::abs(a.k - b.k) + std::abs(a.l - b.l));
            }
        }
        return r;
    }

    [[nodiscard]] const Column* column(int src) const {
        auto it = std::lower_bound(cols_.begin(), cols_.end(), src, [](const Column& c, int s) { return c.src < s; });
        if (it == cols_.end() || it->src != src) return nullptr;
        return &*it;
    }

    [[nodiscard]] FieldElem coeff(BasisIndex src, BasisIndex tgt) const {
        const Column* c = column(slot_of(src.k, src.l));
        if (!c) return FieldElem(0);
        int t = slot_of(tgt.k, tgt.l);
        for (const auto& e : c->entries) {
            if (e.tgt == t) return e.c;
        }
        return FieldElem(0);
    }

    [[nodiscard]] StateVector apply(const StateVector& v) const {
        StateVector out;
        for (const auto& [idx, a] : v.amplitudes()) {
            if (idx.k < 0 || idx.l < 0 || idx.degree() > cutoff_) throw std::out_of_range("vector outside the space");
            if (idx.degree() > horizon_) out.mark_truncated();
            const Column* c = column(slot_of(idx.k, idx.l));
            if (!c) continue;
            for (const auto& e : c->entries) {
                auto t = index_of(e.tgt);
                out.add(t.k, t.l, e.c * a);
            }
        }
        if (v.truncated()) out.mark_truncated();
        return out;
    }

    [[nodiscard]] SparseOp scaled(const FieldElem& s) const {
        SparseOp r(cutoff_);
        r.lo_ = lo_;
        r.hi_ = hi_;
        r.horizon_ = horizon_;
        if (s.is_zero()) return r;
        r.cols_ = cols_;
        for (auto& col : r.cols_) {
            for (auto& e : col.entries) e.c = e.c * s;
        }
        return r;
    }

    friend SparseOp operator+(const SparseOp& a, const SparseOp& b) { return a.combine(b, false); }
    friend SparseOp operator-(const SparseOp& a, const SparseOp& b) { return a.combine(b, true); }
    SparseOp operator-() const { return scaled(FieldElem(-1)); }

    /// a * b (apply b first).
    friend SparseOp operator*(const SparseOp& a, const SparseOp& b) { return compose(a, b); }

    static SparseOp compose(const SparseOp& a, const SparseOp& b) {
        check_same(a, b);
        SparseOp r(a.cutoff_);
        r.lo_ = a.lo_ + b.lo_;
        r.hi_ = a.hi_ + b.hi_;
        r.horizon_ = std::min(b.horizon_, a.horizon_ >= kInf ? kInf : a.horizon_ - b.hi_);
        if (a.cols_.empty() || b.cols_.empty()) return r;
        std::vector<Entry> acc;
        for (const auto& bc : b.cols_) {
            acc.clear();
            for (const auto& be : bc.entries) {
                const Column* ac = a.column(be.tgt);
                if (!ac) continue;
                for (const auto& ae : ac->entries) acc.push_back({ae.tgt, ae.c * be.c});
            }
            normalize(acc);
            if (!acc.empty()) r.cols_.push_back(Column{bc.src, acc});
        }
        return r;
    }

    [[nodiscard]] SparseOp adjoint() const {
        SparseOp r(cutoff_);
        r.lo_ = -hi_;
        r.hi_ = -lo_;
        r.horizon_ = (horizon_ >= kInf && lo_ >= 0) ? kInf : std::min(horizon_, cutoff_) + lo_;
        std::map<int, std::vector<Entry>> rows;
        for (const auto& col : cols_) {
            for (const auto& e : col.entries) rows[e.tgt].push_back({col.src, e.c.conj()});
        }
        for (auto& [t, es] : rows) {
            normalize(es);
            if (!es.empty()) r.cols_.push_back(Column{t, std::move(es)});
        }
        return r;
    }

    /// Exact column-wise comparison on sources with k+l <= max_total_degree.
    /// Returns (equal, largest |coefficient| of the difference).
    [[nodiscard]] std::pair<bool, double> equal_on_domain(const SparseOp& o, int max_total_degree) const {
        SparseOp d = *this - o;
        double res = 0;
        for (const auto& col : d.cols_) {
            if (index_of(col.src).degree() > max_total_degree) continue;
            for (const auto& e : col.entries) res = std::max(res, e.c.abs());
        }
        return {res == 0, res};
    }

    /// Restriction to source columns with k+l <= d.
    [[nodiscard]] SparseOp restricted(int max_total_degree) const {
        SparseOp r(*this);
        std::erase_if(r.cols_, [&](const Column& c) { return index_of(c.src).degree() > max_total_degree; });
        return r;
    }

    /// Rows "k,l -> k',l' : coeff" sorted by (k,l,k',l').
    [[nodiscard]] std::string dump(int max_total_degree = INT_MAX) const {
        std::vector<std::tuple<BasisIndex, BasisIndex, std::string>> rows;
        for (const auto& col : cols_) {
            auto s = index_of(col.src);
            if (s.degree() > max_total_degree) continue;
            for (const auto& e : col.entries) rows.emplace_back(s, index_of(e.tgt), e.c.to_string());
        }
        std::sort(rows.begin(), rows.end());
        std::ostringstream os;
        for (const auto& [s, t, c] : rows) os << s.k << ',' << s.l << " -> " << t.k << ',' << t.l << " : " << c << '\n';
        return os.str();
    }

    [[nodiscard]] std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& c : cols_) n += c.entries.size();
        return n;
    }

    /// Structural equality of stored transitions (ignores metadata).
    [[nodiscard]] bool same_entries(const SparseOp& o) const {
        if (cols_.size() != o.cols_.size()) return false;
        for (std::size_t i = 0; i < cols_.size(); ++i) {
            const auto& a = cols_[i];
            const auto& b = o.cols_[i];
            if (a.src != b.src || a.entries.size() != b.entries.size()) return false;
            for (std::size_t j = 0; j < a.entries.size(); ++j) {
                if (a.entries[j].tgt != b.entries[j].tgt || !(a.entries[j].c == b.entries[j].c)) return false;
            }
        }
        return true;
    }

    void set_horizon(int h) { horizon_ = h; }
    void set_raise(int lo, int hi) {
        lo_ = lo;
        hi_ = hi;
    }

private:
    static void check_same(const SparseOp& a, const SparseOp& b) {
        if (a.cutoff_ != b.cutoff_) throw std::invalid_argument("operators on different cutoffs");
    }

    static void normalize(std::vector<Entry>& es) {
        if (es.size() > 1) {
            std::sort(es.begin(), es.end(), [](const Entry& x, const Entry& y) { return x.tgt < y.tgt; });
            std::size_t w = 0;
            for (std::size_t i = 0; i < es.size(); ++i) {
                if (w > 0 && es[w - 1].tgt == es[i].tgt) {
                    es[w - 1].c += es[i].c;
                } else {
                    if (w != i) es[w] = std::move(es[i]);
                    ++w;
                }
            }
            es.resize(w);
        }
        std::erase_if(es, [](const Entry& e) { return e.c.is_zero(); });
    }

    [[nodiscard]] SparseOp combine(const SparseOp& b, bool subtract) const {
        check_same(*this, b);
        SparseOp r(cutoff_);
        bool a_empty = cols_.empty() && lo_ == 0 && hi_ == 0;
        bool b_empty = b.cols_.empty() && b.lo_ == 0 && b.hi_ == 0;
        if (a_empty) {
            r.lo_ = b.lo_;
            r.hi_ = b.hi_;
        } else if (b_empty) {
            r.lo_ = lo_;
            r.hi_ = hi_;
        } else {
            r.lo_ = std::min(lo_, b.lo_);
            r.hi_ = std::max(hi_, b.hi_);
        }
        r.horizon_ = std::min(horizon_, b.horizon_);
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < cols_.size() || j < b.cols_.size()) {
            if (j == b.cols_.size() || (i < cols_.size() && cols_[i].src < b.cols_[j].src)) {
                r.cols_.push_back(cols_[i++]);
            } else if (i == cols_.size() || b.cols_[j].src < cols_[i].src) {
                Column c = b.cols_[j++];
                if (subtract) {
                    for (auto& e : c.entries) e.c = -e.c;
                }
                r.cols_.push_back(std::move(c));
            } else {
                Column c = cols_[i++];
                for (const auto& e : b.cols_[j].entries) c.entries.push_back({e.tgt, subtract ? -e.c : e.c});
                ++j;
                normalize(c.entries);
                if (!c.entries.empty()) r.cols_.push_back(std::move(c));
            }
        }
        return r;
    }

    int cutoff_ = 0;
    int lo_ = 0;
    int hi_ = 0;
    int horizon_ = kInf;
    std::vector<Column> cols_;
};

inline SparseOp commutator(const SparseOp& a, const SparseOp& b) { return a * b - b * a; }

/// cutoff minus the sum of reaches; negative means the cutoff is too small.
inline int safe_domain(const std::vector<SparseOp>& ops, int cutoff) {
    int s = cutoff;
    for (const auto& o : ops) s -= o.reach();
    return s;
}

}  // namespace chk
