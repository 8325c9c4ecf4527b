#pragma once

// Midpoint-rule integration against the deltoid measure
// d\mu = (1/2\pi^2) \sqrt{27 - 18 z\bar z + 4z^3 + 4\bar z^3 - z^2\bar z^2} dx dy.

#include "chk/chk_poly.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace chk {

using cplx = std::complex<double>;

inline double radicand(double x, double y) {
    const double r2 = x * x + y * y;
    const double re_z3 = x * x * x - 3.0 * x * y * y;
    return 27.0 - 18.0 * r2 + 8.0 * re_z3 - r2 * r2;
}

inline bool inside_region(double x, double y) { return radicand(x, y) >= 0.0; }

inline double weight(double x, double y) {
    return std::sqrt(std::max(radicand(x, y), 0.0)) / (2.0 * std::numbers::pi * std::numbers::pi);
}

/// Neumaier-compensated running sum.
template <class T>
class CompensatedSum {
public:
    void add(T v) {
        if constexpr (std::is_same_v<T, cplx>) {
            re_.add(v.real());
            im_.add(v.imag());
        } else {
            T t = s_ + v;
            if (std::abs(s_) >= std::abs(v)) c_ += (s_ - t) + v;
            else c_ += (v - t) + s_;
            s_ = t;
        }
    }
    [[nodiscard]] T value() const {
        if constexpr (std::is_same_v<T, cplx>) return {re_.value(), im_.value()};
        else return s_ + c_;
    }

private:
    T s_{}, c_{};
    struct Empty {
        void add(double) {}
        [[nodiscard]] double value() const { return 0; }
    };
    std::conditional_t<std::is_same_v<T, cplx>, CompensatedSum<double>, Empty> re_, im_;
};

struct QuadratureGrid {
    int resolution = 2000;
    double half_width = 3.2;
    unsigned jobs = 0;

    void validate() const {
        if (resolution < 1) throw std::invalid_argument("resolution must be >= 1");
        // cusps sit at |z| = 3
        if (!(half_width >= 3.0)) throw std::invalid_argument("box half-width must be >= 3");
    }
    [[nodiscard]] double step() const { return 2.0 * half_width / resolution; }
    [[nodiscard]] double node(int i) const { return -half_width + (i + 0.5) * step(); }
};

/// Accumulates weight * `fill(z, out)` over inside-points, one row of the grid per tile.
/// Rows are summed in index order so the result is independent of the thread count.
inline std::vector<cplx> integrate_many(const QuadratureGrid& g, std::size_t width,
                                        const std::function<void(cplx, std::vector<cplx>&)>& fill) {
    g.validate();
    const int n = g.resolution;
    const double area = g.step() * g.step();
    std::vector<std::vector<cplx>> rows(static_cast<std::size_t>(n));
    std::atomic<int> next{0};
    auto worker = [&] {
        std::vector<cplx> vals(width);
        for (int j = next++; j < n; j = next++) {
            std::vector<CompensatedSum<cplx>> acc(width);
            const double y = g.node(j);
            for (int i = 0; i < n; ++i) {
                const double x = g.node(i);
                const double w = weight(x, y);
                if (w == 0.0) continue;
                fill({x, y}, vals);
                for (std::size_t q = 0; q < width; ++q) acc[q].add(w * vals[q]);
            }
            auto& out = rows[static_cast<std::size_t>(j)];
            out.resize(width);
            for (std::size_t q = 0; q < width; ++q) out[q] = acc[q].value();
        }
    };
    unsigned jobs = g.jobs ? g.jobs : std::max(1u, std::thread::hardware_concurrency());
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
        worker();
    }
    std::vector<CompensatedSum<cplx>> total(width);
    for (const auto& r : rows)
        for (std::size_t q = 0; q < width; ++q) total[q].add(r[q]);
    std::vector<cplx> out(width);
    for (std::size_t q = 0; q < width; ++q) out[q] = total[q].value() * area;
    return out;
}

inline cplx integrate(const std::function<cplx(cplx)>& f, const QuadratureGrid& g) {
    return integrate_many(g, 1, [&](cplx z, std::vector<cplx>& v) { v[0] = f(z); })[0];
}

/// Polynomials with coefficients lowered to double, evaluated from shared powers of z and zbar.
class NumericPolys {
public:
    NumericPolys(const PolyTable& t, int max_degree) : deg_(max_degree) {
        for (int n = 0; n <= max_degree; ++n)
            for (int k = n; k >= 0; --k) {
                labels_.emplace_back(k, n - k);
                std::vector<std::tuple<int, int, cplx>> terms;
                for (const auto& [m, c] : t.get(k, n - k).terms()) terms.emplace_back(m.first, m.second, c.to_complex<double>());
                polys_.push_back(std::move(terms));
            }
    }
    [[nodiscard]] std::size_t size() const { return polys_.size(); }
    [[nodiscard]] const std::vector<std::pair<int, int>>& labels() const { return labels_; }

    void evaluate(cplx z, std::vector<cplx>& out) const {
        std::vector<cplx> zp(static_cast<std::size_t>(deg_ + 1)), zc(static_cast<std::size_t>(deg_ + 1));
        zp[0] = zc[0] = 1.0;
        for (int i = 1; i <= deg_; ++i) {
            zp[static_cast<std::size_t>(i)] = zp[static_cast<std::size_t>(i - 1)] * z;
            zc[static_cast<std::size_t>(i)] = zc[static_cast<std::size_t>(i - 1)] * std::conj(z);
        }
        out.resize(polys_.size());
        for (std::size_t p = 0; p < polys_.size(); ++p) {
            cplx acc = 0;
            for (const auto& [a, b, c] : polys_[p]) acc += c * zp[static_cast<std::size_t>(a)] * zc[static_cast<std::size_t>(b)];
            out[p] = acc;
        }
    }

private:
    int deg_;
    std::vector<std::pair<int, int>> labels_;
    std::vector<std::vector<std::tuple<int, int, cplx>>> polys_;
};

struct GramResult {
    int resolution = 0;
    double mass = 0;
    std::vector<std::pair<int, int>> labels;
    std::vector<std::vector<cplx>> gram;  // G[i][j] = <U_i, U_j>
    [[nodiscard]] double max_abs_offdiag() const {
        double m = 0;
        for (std::size_t i = 0; i < gram.size(); ++i)
            for (std::size_t j = 0; j < gram.size(); ++j)
                if (i != j) m = std::max(m, std::abs(gram[i][j]));
        return m;
    }
    [[nodiscard]] double max_diag_error() const {
        double m = 0;
        for (std::size_t i = 0; i < gram.size(); ++i) m = std::max(m, std::abs(gram[i][i] - 1.0));
        return m;
    }
    [[nodiscard]] double max_deviation() const { return std::max(max_abs_offdiag(), max_diag_error()); }
};

/// Mass and all inner products \int U_{k,l} \overline{U_{m,n}} d\mu for k+l, m+n <= max_degree.
inline GramResult gram_matrix(const PolyTable& t, int max_degree, const QuadratureGrid& g) {
    if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
    if (max_degree > t.max_degree()) throw std::out_of_range("max_degree exceeds polynomial table");
    NumericPolys polys(t, max_degree);
    const std::size_t n = polys.size();
    // upper triangle plus the mass
    const std::size_t width = n * (n + 1) / 2 + 1;
    auto sums = integrate_many(g, width, [&](cplx z, std::vector<cplx>& v) {
        thread_local std::vector<cplx> u;
        polys.evaluate(z, u);
        std::size_t q = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) v[q++] = u[i] * std::conj(u[j]);
        v[q] = 1.0;
    });
    GramResult r;
    r.resolution = g.resolution;
    r.labels = polys.labels();
    r.gram.assign(n, std::vector<cplx>(n));
    std::size_t q = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            r.gram[i][j] = sums[q];
            r.gram[j][i] = std::conj(sums[q]);
            ++q;
        }
    r.mass = sums[q].real();
    return r;
}

struct QuadReport {
    GramResult fine, coarse;
    double richardson_gap = 0;  // max entrywise change between the two resolutions, mass included
    double reliability_tolerance = 1e-2;
    [[nodiscard]] bool reliable() const { return richardson_gap <= reliability_tolerance; }
};

/// Runs the grid and a comparison grid at half the resolution (twice it when resolution is 1).
inline QuadReport orthonormality_check(const PolyTable& t, int max_degree, QuadratureGrid g) {
    g.validate();
    QuadReport r;
    r.fine = gram_matrix(t, max_degree, g);
    QuadratureGrid c = g;
    c.resolution = g.resolution >= 2 ? g.resolution / 2 : 2;
    r.coarse = gram_matrix(t, max_degree, c);
    double gap = std::abs(r.fine.mass - r.coarse.mass);
    for (std::size_t i = 0; i < r.fine.gram.size(); ++i)
        for (std::size_t j = 0; j < r.fine.gram.size(); ++j) gap = std::max(gap, std::abs(r.fine.gram[i][j] - r.coarse.gram[i][j]));
    r.richardson_gap = gap;
    return r;
}

struct SymmetryReport {
    int samples = 0;
    double conjugation_max = 0;
    double rotation_max = 0;
};

/// Weight under z -> zbar and z -> e^{2\pi i/3} z on a fixed sample set.
inline SymmetryReport weight_symmetry(int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-3.2, 3.2);
    const cplx omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    SymmetryReport r;
    r.samples = samples;
    for (int s = 0; s < samples; ++s) {
        cplx z(u(rng), u(rng));
        double w = weight(z.real(), z.imag());
        cplx zc = std::conj(z), zr = omega * z;
        r.conjugation_max = std::max(r.conjugation_max, std::abs(w - weight(zc.real(), zc.imag())));
        r.rotation_max = std::max(r.rotation_max, std::abs(w - weight(zr.real(), zr.imag())));
    }
    return r;
}

}  // namespace chk
