#include "chev/poly.hpp"

#include <doctest.h>

#include <limits>
#include <random>

using namespace chev;

namespace {

Poly random_poly(std::mt19937_64& gen, std::int64_t mod)
{
    Poly p(mod);
    int terms = static_cast<int>(gen() % 4);
    for (int k = 0; k < terms; ++k) {
        Mono m{};
        m[0] = static_cast<std::int16_t>(static_cast<int>(gen() % 7) - 3);
        m[1] = static_cast<std::int16_t>(gen() % 3);
        p = p + Poly::monomial(static_cast<std::int64_t>(gen() % 11) - 5, m, mod);
    }
    return p;
}

}  // namespace

TEST_CASE("ring axioms hold on random Laurent polynomials")
{
    std::mt19937_64 gen(7);
    for (std::int64_t mod : {0, 7}) {
        for (int it = 0; it < 300; ++it) {
            Poly a = random_poly(gen, mod), b = random_poly(gen, mod), c = random_poly(gen, mod);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == Poly(mod));
            CHECK(a + (-a) == Poly(mod));
        }
    }
}

TEST_CASE("zero coefficients never survive")
{
    Poly t = Poly::variable(0, 0);
    Poly p = t + Poly::constant(1, 0) - t;
    CHECK(p == Poly::constant(1, 0));
    CHECK(p.terms().size() == 1);
    Poly q = Poly::constant(7, 7);
    CHECK(q.is_zero());
}

TEST_CASE("units invert and powers agree")
{
    Poly t = Poly::variable(0, 0);
    Poly u = t.pow(3).scaled(-1);
    CHECK(u * u.unit_inverse() == Poly::constant(1, 0));
    CHECK(t.unit_pow(-2) * t.pow(2) == Poly::constant(1, 0));
    CHECK_THROWS(Poly::constant(2, 0).unit_inverse());
    CHECK_THROWS((t + Poly::constant(1, 0)).unit_inverse());
    Poly three = Poly::constant(3, 7);
    CHECK(three * three.unit_inverse() == Poly::constant(1, 7));
}

TEST_CASE("exact division")
{
    Poly t = Poly::variable(0, 0);
    CHECK(t.scaled(6).div_exact(3) == t.scaled(2));
    CHECK_THROWS(t.scaled(5).div_exact(3));
    CHECK(Poly::constant(1, 5).div_exact(2) == Poly::constant(3, 5));
}

TEST_CASE("checked scalars report overflow")
{
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS(add_checked(big, 1));
    CHECK_THROWS(mul_checked(big / 2 + 1, 2));
    CHECK(mod_reduce(-3, 7) == 4);
    for (std::int64_t a = 1; a < 13; ++a) CHECK(mod_reduce(a * mod_inverse(a, 13), 13) == 1);
}

TEST_CASE("coefficient ring names variables")
{
    CoefficientRing R;
    R.add_var("t", true);
    R.add_var("r", false);
    CHECK(R.index_of("r") == 1);
    CHECK(R.is_unit(R.var("t").unit_inverse().scaled(-1)));
    CHECK_FALSE(R.is_unit(R.var("r")));
    CHECK_FALSE(R.is_unit(R.integer(2)));
    CHECK_THROWS(R.index_of("s"));
}
