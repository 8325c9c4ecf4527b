#include "chk/catalog.hpp"
#include "chk/fock.hpp"

#include <gtest/gtest.h>

#include <random>

using chk::BasisIndex;
using chk::Catalog;
using chk::FieldElem;
using chk::Rational;
using chk::SparseOp;
using chk::StateVector;

namespace {

constexpr int kC = 10;

SparseOp random_op(std::mt19937_64& rng, int cutoff) {
    return SparseOp::from_transitions(cutoff, [&](int k, int l, auto& out) {
        for (int j = 0; j < 2; ++j) {
            int dk = static_cast<int>(rng() % 3) - 1;
            int dl = static_cast<int>(rng() % 3) - 1;
            auto c = Rational(static_cast<std::int64_t>(rng() % 7) - 3, static_cast<std::int64_t>(rng() % 3) + 1);
            FieldElem f = (rng() % 2) ? FieldElem(c) : FieldElem::i().scaled(c);
            out.emplace_back(k + dk, l + dl, f);
        }
    });
}

}  // namespace

TEST(Fock, SlotRoundTrip) {
    for (int s = 0; s < chk::space_size(12); ++s) {
        auto b = chk::index_of(s);
        EXPECT_EQ(chk::slot_of(b.k, b.l), s);
    }
}

TEST(Fock, Apply) {
    Catalog cat(kC);
    StateVector v = StateVector::basis(2, 3, FieldElem(5));
    EXPECT_EQ(SparseOp::identity(kC).apply(v), v);
    EXPECT_TRUE(SparseOp(kC).apply(v).empty());
    StateVector w = cat.build("Z").apply(StateVector::basis(0, 0));
    EXPECT_EQ(w, StateVector::basis(1, 0));
    EXPECT_FALSE(w.truncated());
    StateVector edge = cat.build("Z").apply(StateVector::basis(10, 0));
    EXPECT_TRUE(edge.truncated());
}

TEST(Fock, Compose) {
    Catalog cat(kC);
    const SparseOp& a = cat.build("as", {1});
    EXPECT_TRUE((SparseOp::identity(kC) * a).same_entries(a));
    SparseOp c = a * cat.build("as", {-1});
    EXPECT_EQ(c.apply(StateVector::basis(1, 1)), StateVector::basis(1, 1, FieldElem(Rational(1, 10))));
    EXPECT_TRUE(cat.build("Z").scaled(FieldElem(0)).is_zero());
}

TEST(Fock, Commutator) {
    Catalog cat(kC);
    const SparseOp& a = cat.build("as", {1});
    EXPECT_TRUE(chk::commutator(a, a).is_zero());
    SparseOp br = chk::commutator(cat.build("N1"), a);
    EXPECT_TRUE(br.equal_on_domain(-a, br.effective_horizon()).first);
    SparseOp c = chk::commutator(cat.build("as", {-1}), a);
    EXPECT_TRUE(c.apply(StateVector::basis(0, 0)).empty());
}

TEST(Fock, Adjoint) {
    Catalog cat(kC);
    EXPECT_TRUE(SparseOp::identity(kC).adjoint().same_entries(SparseOp::identity(kC)));
    SparseOp zs = cat.build("Z").adjoint();
    int d = std::min(zs.effective_horizon(), cat.build("Zb").effective_horizon());
    EXPECT_GE(d, 8);
    EXPECT_TRUE(zs.equal_on_domain(cat.build("Zb"), d).first);
    SparseOp as = cat.build("as", {1}).adjoint();
    EXPECT_TRUE(as.equal_on_domain(cat.build("as", {-1}), as.effective_horizon()).first);
    SparseOp p = SparseOp::matrix_unit(kC, 1, 2, 3, 0, FieldElem::i());
    EXPECT_TRUE(p.adjoint().same_entries(SparseOp::matrix_unit(kC, 3, 0, 1, 2, -FieldElem::i())));
}

TEST(Fock, SafeDomain) {
    Catalog cat(kC);
    EXPECT_EQ(chk::safe_domain({cat.build("Z")}, kC), 9);
    EXPECT_EQ(chk::safe_domain({cat.build("ar", {1}), cat.build("ar", {-1})}, kC), 6);
    EXPECT_EQ(chk::safe_domain({SparseOp::identity(kC)}, kC), 10);
    EXPECT_LT(chk::safe_domain({cat.build("ar", {1}), cat.build("ar", {1}), cat.build("ar", {1}),
                                cat.build("ar", {1}), cat.build("ar", {1}), cat.build("ar", {1})},
                               kC),
              0);
}

TEST(Fock, EqualOnDomain) {
    Catalog cat(kC);
    const SparseOp& a = cat.build("as", {1});
    auto [eq, res] = a.equal_on_domain(a, 10);
    EXPECT_TRUE(eq);
    EXPECT_EQ(res, 0.0);
    auto [eq2, res2] = cat.build("ar", {1}).equal_on_domain(a, 2);
    EXPECT_FALSE(eq2);
    EXPECT_GT(res2, 0.0);
}

TEST(Fock, MatrixUnit) {
    SparseOp p = SparseOp::matrix_unit(kC, 1, 0, 0, 1);
    EXPECT_EQ(p.apply(StateVector::basis(1, 0)), StateVector::basis(0, 1));
    EXPECT_TRUE(p.apply(StateVector::basis(0, 0)).empty());
    EXPECT_TRUE(SparseOp::matrix_unit(kC, 1, 0, -1, 1).is_zero());
}

TEST(Fock, Dump) {
    SparseOp p = SparseOp::matrix_unit(kC, 1, 0, 0, 1, FieldElem(Rational(1, 2))) + SparseOp::matrix_unit(kC, 0, 0, 0, 0);
    EXPECT_EQ(p.dump(), "0,0 -> 0,0 : 1\n1,0 -> 0,1 : 1/2\n");
}

TEST(Fock, RandomizedAlgebra) {
    std::mt19937_64 rng(42);
    const int c = 6;
    for (int t = 0; t < 20; ++t) {
        SparseOp a = random_op(rng, c);
        SparseOp b = random_op(rng, c);
        SparseOp d = random_op(rng, c);
        auto deg = [](const SparseOp& x) { return x.effective_horizon(); };
        SparseOp l1 = (a * b) * d;
        SparseOp r1 = a * (b * d);
        EXPECT_TRUE(l1.same_entries(r1));
        EXPECT_TRUE((a * (b + d)).same_entries(a * b + a * d));
        FieldElem s = FieldElem::sqrt5() + FieldElem::i();
        EXPECT_TRUE((a.scaled(s) * b).same_entries((a * b).scaled(s)));
        SparseOp aa = a.adjoint().adjoint();
        EXPECT_TRUE(aa.equal_on_domain(a, std::min(deg(aa), deg(a))).first);
        SparseOp ab = (a * b).adjoint();
        SparseOp ba = b.adjoint() * a.adjoint();
        EXPECT_TRUE(ab.equal_on_domain(ba, std::min(deg(ab), deg(ba))).first);
        SparseOp jac = chk::commutator(chk::commutator(a, b), d) + chk::commutator(chk::commutator(b, d), a) +
                       chk::commutator(chk::commutator(d, a), b);
        EXPECT_TRUE(jac.is_zero());
        EXPECT_LE(chk::commutator(a, b).reach(), a.reach() + b.reach());
    }
}

TEST(Fock, HorizonIsExactOnTruncatedProducts) {
    // compare products computed at cutoff 10 against cutoff 14 on the declared horizon
    Catalog small(10);
    Catalog big(14);
    auto check = [&](const std::function<SparseOp(Catalog&)>& f) {
        SparseOp a = f(small);
        SparseOp b = f(big);
        int h = a.effective_horizon();
        for (const auto& col : b.columns()) {
            auto s = chk::index_of(col.src);
            if (s.degree() > h) continue;
            for (const auto& e : col.entries) {
                auto t = chk::index_of(e.tgt);
                EXPECT_EQ(a.coeff(s, t), e.c) << s.k << "," << s.l << "->" << t.k << "," << t.l;
            }
        }
        for (const auto& col : a.columns()) {
            auto s = chk::index_of(col.src);
            if (s.degree() > h) continue;
            for (const auto& e : col.entries) EXPECT_EQ(b.coeff(s, chk::index_of(e.tgt)), e.c);
        }
        return h;
    };
    EXPECT_EQ(check([](Catalog& c) { return c.build("ar", {-1}) * c.build("ar", {1}); }), 8);
    EXPECT_EQ(check([](Catalog& c) { return c.build("ar", {1}) * c.build("ar", {-1}); }), 10);
    check([](Catalog& c) { return c.build("Z") * c.build("Zb").adjoint() * c.build("as", {1}); });
    check([](Catalog& c) { return c.build("ar", {-1}).adjoint() * c.build("Zd"); });
    check([](Catalog& c) { return chk::commutator(c.build("HL", {0, 2, 1, 0}), c.build("ar", {-1})); });
}
