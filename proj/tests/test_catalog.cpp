#include "chk/catalog.hpp"

#include <gtest/gtest.h>

#include <thread>

using chk::Catalog;
using chk::FieldElem;
using chk::Form;
using chk::Rational;
using chk::SparseOp;
using chk::StateVector;
using chk::gen;

namespace {

Catalog& cat10() {
    static Catalog c(10);
    return c;
}

StateVector u(int k, int l, const FieldElem& c = FieldElem(1)) { return StateVector::basis(k, l, c); }

bool same_on_domain(const SparseOp& a, const SparseOp& b) {
    int d = std::min(a.effective_horizon(), b.effective_horizon());
    return a.equal_on_domain(b, d).first;
}

}  // namespace

TEST(Catalog, BasisActionExamples) {
    Catalog& c = cat10();
    FieldElem inv10 = FieldElem::sqrt10().scaled(Rational(1, 10));
    EXPECT_EQ(c.build("as", {1}).apply(u(2, 1)), u(1, 2, inv10));
    EXPECT_TRUE(c.build("as", {1}).apply(u(0, 3)).empty());
    FieldElem r25 = FieldElem::sqrt10().scaled(Rational(1, 5));
    EXPECT_EQ(r25 * r25, FieldElem(Rational(2, 5)));
    EXPECT_EQ(c.build("ar", {-1}).apply(u(3, 2)), u(2, 1, r25));
    EXPECT_TRUE(c.build("ar", {-1}).apply(u(0, 2)).empty());
    EXPECT_EQ(c.build("N1").apply(u(2, 3)), u(2, 3, FieldElem(2)));
    EXPECT_EQ(c.build("P2").apply(u(0, 4)), u(0, 4));
    EXPECT_TRUE(c.build("P2").apply(u(1, 3)).empty());
    const SparseOp& ib = c.build(gen("IB", {}, {FieldElem(Rational(1, 2)), FieldElem(Rational(1, 2))}));
    EXPECT_EQ(ib.apply(u(0, 0)), u(0, 0, FieldElem(Rational(1, 2))));
    EXPECT_EQ(ib.apply(u(3, 0)), u(3, 0, FieldElem(Rational(1, 2))));
    EXPECT_TRUE(ib.apply(u(1, 1)).empty());
}

TEST(Catalog, Errors) {
    Catalog& c = cat10();
    EXPECT_THROW((void)c.build("Nope"), chk::UnknownGenerator);
    EXPECT_THROW((void)c.build("as"), std::invalid_argument);
    EXPECT_THROW((void)c.build("as", {2}), std::invalid_argument);
    EXPECT_THROW((void)c.build("N1", {}, Form::Constructor), std::invalid_argument);
}

TEST(Catalog, ConsistentConstructors) {
    Catalog& c = cat10();
    for (const char* n : {"Z", "Zb", "Zd", "Zbd", "Hs"}) {
        auto r = chk::cross_check(c, gen(n));
        EXPECT_TRUE(r.consistent) << n;
        EXPECT_EQ(r.status, "consistent");
    }
    for (int s : {1, -1}) {
        auto r = chk::cross_check(c, gen("as", {s}));
        EXPECT_TRUE(r.consistent);
        EXPECT_GE(r.domain, 7);
    }
}

TEST(Catalog, RadialConstructorsDisagreeWithBasisActions) {
    Catalog& c = cat10();
    for (int s : {1, -1}) {
        auto r = chk::cross_check(c, gen("ar", {s}), {"ar"});
        EXPECT_FALSE(r.consistent);
        EXPECT_EQ(r.first_difference, "0,0");
        EXPECT_EQ(r.status, "inconsistent (documented)");
    }
    auto h = chk::cross_check(c, gen("Hr"));
    EXPECT_FALSE(h.consistent);
    EXPECT_EQ(h.status, "inconsistent (new)");
}

TEST(Catalog, Adjointness) {
    Catalog& c = cat10();
    EXPECT_TRUE(same_on_domain(c.build("as", {1}).adjoint(), c.build("as", {-1})));
    EXPECT_TRUE(same_on_domain(c.build("ar", {1}).adjoint(), c.build("ar", {-1})));
    EXPECT_TRUE(same_on_domain(c.build("Z").adjoint(), c.build("Zb")));
    EXPECT_TRUE(same_on_domain(c.build("ab0", {1}).adjoint(), c.build("ab0", {-1})));
    for (const char* k : {"Ks", "Kr"}) {
        const SparseOp& op = c.build(k);
        EXPECT_TRUE((op.adjoint() * op).same_entries(SparseOp::identity(10))) << k;
        EXPECT_TRUE((op * op.adjoint()).same_entries(SparseOp::identity(10))) << k;
    }
}

TEST(Catalog, SeriesIdentities) {
    Catalog& c = cat10();
    EXPECT_TRUE(c.build("P1").same_entries(c.build("HL", {0, 0, 0, 0})));
    EXPECT_TRUE(c.build("P2").same_entries(c.build("HR", {0, 0, 0, 0})));
    EXPECT_TRUE(c.build("P1").same_entries(c.build("Pbk", {0, 0})));
    EXPECT_TRUE(c.build("P2").same_entries(c.build("Pkb", {0, 0})));
    EXPECT_TRUE(c.build("ab0", {1}).same_entries(c.build("HL", {0, 0, 1, 0})));
    EXPECT_TRUE(c.build("a0b", {-1}).same_entries(c.build("HR", {0, 1, 0, 0})));
    EXPECT_TRUE(c.build("Pbk", {2, 1}).same_entries(c.build("HL", {2, 1, 1, 2})));
    EXPECT_TRUE(c.build("Pkb", {2, 1}).same_entries(c.build("HR", {1, 2, 2, 1})));
    EXPECT_TRUE(c.build("a0b", {-1}).same_entries(c.build("HR", {0, 0, 0, -1})));
    EXPECT_TRUE(c.build("HR", {-1, 0, 0, 0}).is_zero());
    // the radial series starts at m = 0; the hatted one also runs over negative shifts
    EXPECT_TRUE(c.build("Rl", {1, 0, 2}).same_entries(c.build("HL", {0, 0, 2, 2})));
    SparseOp tail = c.build("HL", {1, 1, 2, 2}) - c.build("Rl", {1, 1, 2});
    EXPECT_TRUE(tail.same_entries(c.build("P", {0, 1, 1, 2})));
    // I_B(1/2,1/2) = (1/2)(P1 + P2 - P^{00}_{00})
    SparseOp rhs = (c.build("Pbk", {0, 0}) + c.build("Pkb", {0, 0}) - c.build("P", {0, 0, 0, 0})).scaled(Rational(1, 2));
    const SparseOp& ib = c.build(gen("IB", {}, {FieldElem(Rational(1, 2)), FieldElem(Rational(1, 2))}));
    EXPECT_TRUE(ib.same_entries(rhs));
}

TEST(Catalog, BoundaryLaddersVanishOffSubspace) {
    Catalog& c = cat10();
    for (int s : {1, -1}) {
        for (int k = 0; k <= 4; ++k) {
            for (int l = 1; l <= 4; ++l) EXPECT_TRUE(c.build("ab0", {s}).apply(u(k, l)).empty());
            for (int l = 1; l <= 4; ++l) EXPECT_TRUE(c.build("a0b", {s}).apply(u(l, k)).empty());
        }
    }
}

TEST(Catalog, Spectra) {
    Catalog& c = cat10();
    for (const char* h : {"Hs", "H0"}) {
        auto rows = chk::spectrum_check(c, h);
        EXPECT_FALSE(rows.empty());
        for (const auto& r : rows) EXPECT_TRUE(r.match) << h << " " << r.k << "," << r.l;
    }
    auto hs_ctor = chk::spectrum_check(c, "Hs", Form::Constructor);
    for (const auto& r : hs_ctor) EXPECT_TRUE(r.match);
    // ladder form: corner 9/10, edge 21/40, interior 4/5
    for (const auto& r : chk::spectrum_check(c, "Hr")) {
        EXPECT_TRUE(r.eigenvector);
        Rational want = (r.k == 0 && r.l == 0) ? Rational(9, 10) : (r.k == 0 || r.l == 0) ? Rational(21, 40) : Rational(4, 5);
        EXPECT_EQ(r.computed, FieldElem(want));
        EXPECT_FALSE(r.match);
    }
    auto ctor = chk::spectrum_check(c, "Hr", Form::Constructor);
    EXPECT_FALSE(ctor.front().eigenvector);
}

TEST(Catalog, ConcurrentFirstAccess) {
    Catalog c(8);
    std::vector<std::thread> ts;
    std::vector<const SparseOp*> got(4);
    for (int t = 0; t < 4; ++t) {
        ts.emplace_back([&, t] { got[static_cast<std::size_t>(t)] = &c.build("Hr", {}, Form::Constructor); });
    }
    for (auto& t : ts) t.join();
    for (int t = 1; t < 4; ++t) EXPECT_EQ(got[0], got[static_cast<std::size_t>(t)]);
}

TEST(Catalog, EntriesResolve) {
    Catalog c(6);
    for (const auto& e : chk::catalog_entries()) {
        std::vector<FieldElem> sc(static_cast<std::size_t>(e.n_scalars), FieldElem(Rational(1, 2)));
        EXPECT_NO_THROW((void)c.build(gen(e.name, e.sample_ints, sc))) << e.name;
        if (e.has_constructor) EXPECT_NO_THROW((void)c.build(gen(e.name, e.sample_ints, sc), Form::Constructor)) << e.name;
    }
}
