#include <doctest.h>

#include "oracles.hpp"
#include "slicecert/monomial.hpp"

using namespace slicecert;

namespace {
const Shape sh22 = Shape::parse("2x2");

Monomial m(std::initializer_list<Monomial::Entry> entries) {
    return Monomial::from_entries(sh22, entries);
}
}  // namespace

TEST_CASE("monomial construction normalizes entries") {
    Monomial one = Monomial::one(sh22);
    CHECK(one.is_one());
    CHECK(one.degree() == 0);
    CHECK(one.str() == "1");

    // duplicates accumulate, zeros drop
    Monomial a = m({{0, 1}, {2, 2}, {0, 1}, {3, 0}});
    CHECK(a.degree() == 4);
    CHECK(a.exponent(0) == 2);
    CHECK(a.exponent(2) == 2);
    CHECK(a.exponent(3) == 0);
    CHECK(a == m({{2, 2}, {0, 2}}));
    CHECK(a.str() == "x[1,1]^2*x[2,1]^2");

    CHECK(Monomial::variable(sh22, VarIndex{1, 2}).str() == "x[1,2]");
    CHECK(Monomial::variable(sh22, VarIndex{1, 2}, 3).degree() == 3);
    CHECK(Monomial::from_dense(sh22, {1, 0, 0, 2}) == m({{0, 1}, {3, 2}}));
    CHECK_THROWS_AS(Monomial::from_entries(sh22, {{0, -1}}), std::invalid_argument);
}

TEST_CASE("squarefree detection") {
    CHECK(Monomial::one(sh22).is_squarefree());
    CHECK(m({{0, 1}, {3, 1}}).is_squarefree());
    CHECK_FALSE(m({{0, 2}}).is_squarefree());
}

TEST_CASE("monomial algebra identities on random pairs") {
    auto rng = oracles::case_rng(0x30303);
    for (int k = 0; k < 300; ++k) {
        Monomial a = oracles::random_monomial(sh22, 6, rng);
        Monomial b = oracles::random_monomial(sh22, 6, rng);
        Monomial prod = mono_mul(a, b);
        CHECK(prod.degree() == a.degree() + b.degree());
        CHECK(mono_mul(mono_lcm(a, b), mono_gcd(a, b)) == prod);  // max + min = sum
        CHECK(mono_divides(a, prod));
        CHECK(*mono_divide(prod, a) == b);
        CHECK(mono_coprime(a, b) == (mono_gcd(a, b).is_one()));
        if (!mono_divides(b, a)) CHECK_FALSE(mono_divide(a, b).has_value());
    }
}

TEST_CASE("division is componentwise") {
    Monomial a = m({{0, 2}, {1, 1}});
    CHECK_FALSE(mono_divide(a, m({{0, 3}})).has_value());
    CHECK(*mono_divide(a, m({{0, 2}})) == m({{1, 1}}));
    CHECK(*mono_divide(a, a) == Monomial::one(sh22));
}

TEST_CASE("powers multiply exponents and guard overflow") {
    Monomial a = m({{0, 3}, {2, 1}});
    CHECK(mono_pow(a, 0) == Monomial::one(sh22));
    CHECK(mono_pow(a, 4) == m({{0, 12}, {2, 4}}));
    CHECK_THROWS_AS(mono_pow(m({{0, 1L << 30}}), 1L << 20), std::overflow_error);
    CHECK_THROWS_AS(mono_pow(a, -1), std::invalid_argument);
}

TEST_CASE("lex and grevlex disagree exactly as expected") {
    // variable ranks: x[1,1] > x[1,2] > x[2,1] > x[2,2]
    MonomialOrder lex = MonomialOrder::lex();
    MonomialOrder grevlex = MonomialOrder::grevlex();

    Monomial x11 = m({{0, 1}});
    Monomial x12cube = m({{1, 3}});
    CHECK(mono_compare(x11, x12cube, lex) == std::strong_ordering::greater);
    CHECK(mono_compare(x11, x12cube, grevlex) == std::strong_ordering::less);  // degree first

    Monomial a = m({{0, 1}, {2, 1}});  // x[1,1]*x[2,1]
    Monomial b = m({{1, 2}});          // x[1,2]^2
    CHECK(mono_compare(a, b, lex) == std::strong_ordering::greater);
    // grevlex at equal degree: larger exponent on the lowest-ranked variable
    // present makes a monomial smaller
    CHECK(mono_compare(a, b, grevlex) == std::strong_ordering::less);
}

TEST_CASE("orders are total, multiplicative, and bounded below by 1") {
    auto rng = oracles::case_rng(0x0d7de7);
    for (const MonomialOrder& ord : {MonomialOrder::lex(), MonomialOrder::grevlex()}) {
        for (int k = 0; k < 200; ++k) {
            Monomial a = oracles::random_monomial(sh22, 5, rng);
            Monomial b = oracles::random_monomial(sh22, 5, rng);
            Monomial c = oracles::random_monomial(sh22, 5, rng);

            auto ab = mono_compare(a, b, ord);
            CHECK((ab == std::strong_ordering::equal) == (a == b));
            CHECK(mono_compare(b, a, ord) == (ab == std::strong_ordering::less
                                                  ? std::strong_ordering::greater
                                                  : ab == std::strong_ordering::greater
                                                        ? std::strong_ordering::less
                                                        : std::strong_ordering::equal));
            // multiplicativity
            CHECK(mono_compare(mono_mul(a, c), mono_mul(b, c), ord) == ab);
            // 1 is the minimum
            if (!a.is_one())
                CHECK(mono_compare(a, Monomial::one(sh22), ord) ==
                      std::strong_ordering::greater);
            // transitivity sample
            auto bc = mono_compare(b, c, ord);
            if (ab == std::strong_ordering::less && bc == std::strong_ordering::less)
                CHECK(mono_compare(a, c, ord) == std::strong_ordering::less);
        }
    }
}

TEST_CASE("grevlex refines total degree") {
    auto rng = oracles::case_rng(0x9e91e);
    for (int k = 0; k < 200; ++k) {
        Monomial a = oracles::random_monomial(sh22, 5, rng);
        Monomial b = oracles::random_monomial(sh22, 5, rng);
        if (a.degree() != b.degree())
            CHECK((mono_compare(a, b, MonomialOrder::grevlex()) ==
                   std::strong_ordering::greater) == (a.degree() > b.degree()));
    }
}

TEST_CASE("elimination order ranks auxiliary variables above the array") {
    MonomialOrder elim = MonomialOrder::elim();
    Monomial t = Monomial::aux_variable(sh22, 0);
    CHECK(t.has_aux());
    CHECK(t.str() == "t0");
    Monomial big = m({{0, 7}, {1, 7}, {2, 7}, {3, 7}});
    CHECK(mono_compare(t, big, elim) == std::strong_ordering::greater);
    CHECK(mono_compare(mono_mul(t, big), big, elim) == std::strong_ordering::greater);
    // within the array block the tie falls back to grevlex
    Monomial a = m({{0, 1}, {2, 1}});
    Monomial b = m({{1, 2}});
    CHECK(mono_compare(mono_mul(t, a), mono_mul(t, b), elim) ==
          mono_compare(a, b, MonomialOrder::grevlex()));
}

TEST_CASE("monomials from different shapes do not mix") {
    Shape sh23 = Shape::parse("2x3");
    Monomial a = Monomial::variable(sh22, VarIndex{1, 1});
    Monomial b = Monomial::variable(sh23, VarIndex{1, 1});
    CHECK(a != b);
    CHECK_THROWS_AS(mono_mul(a, b), std::invalid_argument);
}
