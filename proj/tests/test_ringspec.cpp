#include "chev/chevmodel.hpp"
#include "chev/ringspec.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace chev;
using testing_support::make_system;

namespace {

// Z[t,t^-1] units are (-1)^a t^b.
UnitElement signed_t(int a, int b)
{
    return UnitElement{{a, b}};
}

}  // namespace

TEST_CASE("unit decomposition of Laurent monomials")
{
    RingSpec R = ring_preset("Z_laurent");
    REQUIRE(R.rank() == 2);
    REQUIRE(R.units[0].order == 2);

    auto one = unit_decompose(R, unit_one(R), 1);
    CHECK(one.w == unit_one(R));
    CHECK(one.k == 0);
    CHECK(one.u == unit_one(R));

    auto d = unit_decompose(R, signed_t(1, 5), 1);
    CHECK(d.w == signed_t(0, 1));
    CHECK(d.k == 2);
    CHECK(d.u == signed_t(1, 1));

    auto e = unit_decompose(R, signed_t(0, 2), 1);
    CHECK(e.w == signed_t(0, 1));
    CHECK(e.k == 1);
    CHECK(e.u == unit_one(R));
}

TEST_CASE("unit decomposition round-trips over a box")
{
    for (const char* name : {"Z", "Z_laurent", "Z_half", "Fq_laurent"}) {
        RingSpec R = ring_preset(name);
        for (int c : {1, 2, 3})
            for (const auto& v : unit_box(R, 9)) {
                auto d = unit_decompose(R, v, c);
                CHECK(unit_in_box(R, d.u, c));
                CHECK(unit_recombine(R, d) == unit_canonical(R, v));
                // The value of w^{2k} u equals the value of v.
                Poly lhs = unit_value(R, unit_pow(R, d.w, 2 * d.k)) * unit_value(R, d.u);
                CHECK(lhs == unit_value(R, v));
            }
    }
}

TEST_CASE("product expressions are bilinear and unit-equivariant")
{
    RingSpec R = ring_preset("Z_laurent");
    const int c = 2;
    auto val = [&](const FormalRingElement& f) { return formal_value(R, f); };
    for (const auto& u : unit_box(R, 3))
        for (const auto& v : unit_box(R, 3)) {
            auto r = formal_from_unit(R, u, 0, c, 2);
            auto s = formal_from_unit(R, v, 0, c, -3);
            for (int m = 1; m <= 2; ++m)
                for (int n = 1; n <= 2; ++n) {
                    auto p = product_expr(R, r, s, m, n, c);
                    // Oracle: the product of powers of the two values.
                    CHECK(val(p) == val(r).pow(m) * val(s).pow(n));
                }
            auto one = formal_from_unit(R, unit_one(R), 0, c);
            CHECK(val(product_expr(R, one, s, 1, 1, c)) == val(s));
        }
    // Additivity in the first argument: term lists concatenate.
    auto r0 = formal_from_unit(R, signed_t(0, 1), 0, c);
    auto r1 = formal_from_unit(R, signed_t(1, 3), 0, c);
    FormalRingElement sum{r0.terms};
    sum.terms.insert(sum.terms.end(), r1.terms.begin(), r1.terms.end());
    auto s = formal_from_unit(R, signed_t(0, -2), 0, c);
    auto a = product_expr(R, r0, s, 1, 1, c), b = product_expr(R, r1, s, 1, 1, c);
    FormalRingElement ab{a.terms};
    ab.terms.insert(ab.terms.end(), b.terms.begin(), b.terms.end());
    CHECK(product_expr(R, sum, s, 1, 1, c) == ab);
}

TEST_CASE("not very bad and quite good")
{
    RingSpec Z = ring_preset("Z"), L = ring_preset("Z_laurent"), H = ring_preset("Z_half");
    RingSpec F5 = ring_preset("Fq_laurent", 5);
    auto T = [](const char* s) { return RootSystemType::parse(s); };
    CHECK(nvb(Z, T("A3")));
    CHECK(nvb(L, T("D4")));
    CHECK_FALSE(nvb(Z, T("B2")));
    CHECK(nvb(H, T("B2")));
    CHECK(nvb(H, T("F4")));
    CHECK_FALSE(nvb(H, T("G2")));
    CHECK(nvb(F5, T("G2")));
    CHECK_FALSE(nvb(ring_preset("Fq_laurent", 3), T("G2")));

    CHECK(qg(L, T("A3")) == Tri::yes);
    CHECK(qg(ring_preset("O_S", 0, 2), T("G2")) == Tri::yes);
    RingSpec unknown_b = Z;
    unknown_b.borel2_fp = Tri::unknown;
    CHECK(qg(unknown_b, T("B2")) == Tri::unknown);
    RingSpec no_b = Z;
    no_b.borel2_fp = Tri::no;
    CHECK(qg(no_b, T("C3")) == Tri::no);
}

TEST_CASE("toral pairs satisfy their equations and act as claimed")
{
    CoefficientRing K = symbolic_ring();
    for (const char* name : {"A2", "A3", "B2", "B3", "G2"}) {
        auto rs = make_system(name);
        AdjointModel adj(ChevalleyBasisData::build(*rs));
        Poly u = K.var("u"), r = K.var("r"), s = K.var("s");
        for (const auto& a : rs->roots())
            for (const auto& b : rs->roots()) {
                if (a == b || a == -b) continue;
                ToralPair tp = toral_pair(*rs, a, b);
                CHECK(tp.n != 0);
                ModelMatrix h, hinv;
                if (tp.construction == "orthogonal") {
                    CHECK(rs->cartan_int(a, b) == 0);
                    CHECK(tp.n == 2);
                    h = adj.h(b, u);
                    hinv = adj.h_inv(b, u);
                } else if (tp.construction == "bystander") {
                    REQUIRE(tp.bystander);
                    CHECK(rs->cartan_int(a, *tp.bystander) == 0);
                    CHECK(tp.n == rs->cartan_int(b, *tp.bystander));
                    h = adj.h(*tp.bystander, u);
                    hinv = adj.h_inv(*tp.bystander, u);
                } else {
                    CHECK(tp.construction == "pq");
                    CHECK(2 * tp.p - tp.q * rs->cartan_int(a, b) == 0);
                    CHECK(tp.n == tp.p * rs->cartan_int(b, a) - 2 * tp.q);
                    h = adj.h(a, u.unit_pow(tp.p)) * adj.h(b, u.unit_pow(-tp.q));
                    hinv = adj.h(b, u.unit_pow(tp.q)) * adj.h(a, u.unit_pow(-tp.p));
                }
                CHECK(h * adj.x(a, r) * hinv == adj.x(a, r));
                CHECK(h * adj.x(b, s) * hinv == adj.x(b, u.unit_pow(tp.n) * s));
            }
    }
}

TEST_CASE("toral pair examples and constants")
{
    auto a2 = make_system("A2");
    auto t = toral_pair(*a2, a2->simple(0), a2->simple(1));
    CHECK(t.construction == "pq");
    CHECK(std::abs(t.n) == 3);

    auto a3 = make_system("A3");
    auto b = toral_pair(*a3, a3->simple(0), a3->simple(1));
    CHECK(b.construction == "bystander");
    CHECK(b.n == -1);
    REQUIRE(b.bystander);
    CHECK(*b.bystander == a3->simple(2));

    // Frozen from an exhaustive search over all pairs.
    const std::vector<std::pair<const char*, int>> frozen{{"A1", 2}, {"A2", 3}, {"A3", 2}, {"B2", 2}, {"B3", 2},
                                                          {"C3", 2}, {"D4", 2}, {"G2", 3}, {"F4", 2}};
    for (const auto& [name, c] : frozen) {
        CAPTURE(name);
        CHECK(toral_constant(*make_system(name)) == c);
    }
}

TEST_CASE("preset flags")
{
    CHECK(ring_preset("Z_laurent").borel2_fp == Tri::no);
    CHECK(ring_preset("Z_laurent").parabolics_fg == Tri::yes);
    auto os = ring_preset("O_S", 7, 1);
    CHECK(os.parabolics_fg == Tri::no);
    REQUIRE(os.arithmetic);
    CHECK(os.arithmetic->global_char == 7);
    CHECK(ring_preset("O_S", 7, 3).borel2_fp == Tri::yes);
    CHECK(ring_preset("O_S", 0, 1).borel2_fp == Tri::yes);
    CHECK_THROWS(ring_preset("nonsense"));
    for (const auto& n : ring_preset_names()) CHECK_NOTHROW(ring_preset(n).validate());
}
