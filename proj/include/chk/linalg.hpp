#pragma once

// Exact sparse linear algebra over the field: incremental echelon form,
// rank, span membership and kernel vectors.

#include "chk/fock.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace chk {

template <class T>
using BasicSVec = std::map<std::int64_t, T>;
using SVec = BasicSVec<FieldElem>;

/// Coordinates of an operator on source columns with k+l <= max_degree.
/// `block` offsets the keys so several operators can be concatenated.
inline SVec to_svec(const SparseOp& op, int max_degree, std::int64_t block = 0) {
    const std::int64_t s = space_size(op.cutoff());
    SVec v;
    for (const auto& col : op.columns()) {
        if (index_of(col.src).degree() > max_degree) continue;
        for (const auto& e : col.entries) v.emplace_hint(v.end(), (block * s + col.src) * s + e.tgt, e.c);
    }
    return v;
}

template <class T>
void axpy(BasicSVec<T>& y, const T& a, const BasicSVec<T>& x) {
    for (const auto& [k, c] : x) {
        auto [it, ins] = y.try_emplace(k, a * c);
        if (!ins) {
            it->second += a * c;
            if (it->second.is_zero()) y.erase(it);
        }
    }
}

template <class T>
class BasicSpan {
public:
    using Vec = BasicSVec<T>;

    [[nodiscard]] int rank() const { return static_cast<int>(rows_.size()); }

    /// Residual of v after elimination against the stored rows; empty iff v is in the span.
    [[nodiscard]] Vec reduce(Vec v) const {
        reduce_impl(v, nullptr);
        return v;
    }

    [[nodiscard]] bool contains(const Vec& v) const { return reduce(v).empty(); }

    /// Adds v; returns false if it was already in the span.
    bool insert(Vec v) {
        reduce_impl(v, nullptr);
        if (v.empty()) return false;
        store(std::move(v), {});
        return true;
    }

    /// Like insert, but tracks combinations of labelled inputs. When v is dependent,
    /// returns the combination sum(c_j * input_j) that vanishes (with coefficient 1 on `label`).
    std::optional<Vec> insert_tracked(Vec v, std::int64_t label) {
        Vec combo{{label, T(1)}};
        reduce_impl(v, &combo);
        if (v.empty()) return combo;
        store(std::move(v), std::move(combo));
        return std::nullopt;
    }

private:
    struct Row {
        Vec v;
        Vec combo;
    };

    void reduce_impl(Vec& v, Vec* combo) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto p = pivots_.find(it->first);
            if (p == pivots_.end()) {
                ++it;
                continue;
            }
            const Row& r = rows_[p->second];
            T f = -it->second;
            std::int64_t key = it->first;
            axpy(v, f, r.v);
            if (combo) axpy(*combo, f, r.combo);
            it = v.upper_bound(key);
        }
    }

    void store(Vec v, Vec combo) {
        T inv = T(1) / v.begin()->second;
        for (auto& [k, c] : v) c = c * inv;
        for (auto& [k, c] : combo) c = c * inv;
        pivots_.emplace(v.begin()->first, rows_.size());
        rows_.push_back(Row{std::move(v), std::move(combo)});
    }

    std::vector<Row> rows_;
    std::unordered_map<std::int64_t, std::size_t> pivots_;
};

using LinearSpan = BasicSpan<FieldElem>;

/// Rank of a family of sparse vectors.
inline int rank_of(const std::vector<SVec>& vs) {
    LinearSpan s;
    for (const auto& v : vs) s.insert(v);
    return s.rank();
}

}  // namespace chk
