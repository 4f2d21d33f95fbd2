#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "slicecert/groebner.hpp"
#include "slicecert/slice_family.hpp"
#include "slicecert/text_io.hpp"

using namespace slicecert;

namespace {
const Shape sh22 = Shape::parse("2x2");
const MonomialOrder kOrd = MonomialOrder::grevlex();

PolyQ pp(const std::string& s, const Shape& sh = sh22) { return parse_poly(s, sh); }

std::vector<PolyQ> random_gens(std::mt19937_64& rng, int count) {
    std::vector<PolyQ> gens;
    for (int i = 0; i < count; ++i) {
        PolyQ g = oracles::random_poly(sh22, 3, 3, rng);
        if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) gens.push_back(pp("x[1,1]"));
    return gens;
}
}  // namespace

TEST_CASE("division trace reassembles the input") {
    auto rng = oracles::case_rng(0xd141de);
    for (int k = 0; k < 150; ++k) {
        std::vector<PolyQ> G = random_gens(rng, 3);
        PolyQ f = oracles::random_poly(sh22, 5, 6, rng);
        NFResult<Rational> nf = normal_form_trace(f, G, kOrd);
        PolyQ rebuilt = nf.remainder;
        for (std::size_t i = 0; i < G.size(); ++i)
            rebuilt = rebuilt + nf.quotients[i] * G[i];
        CHECK(rebuilt == f);
        CHECK(nf.remainder == normal_form(f, G, kOrd));
        // no remainder term is divisible by any leading monomial
        for (const auto& t : nf.remainder.terms())
            for (const auto& g : G)
                CHECK_FALSE(mono_divides(g.with_order(kOrd).leading_monomial(), t.mono));
    }
}

TEST_CASE("normal form is a fixpoint and detects membership differences") {
    auto rng = oracles::case_rng(0xf1fe);
    for (int k = 0; k < 200; ++k) {
        std::vector<PolyQ> gens = random_gens(rng, 3);
        GroebnerBasis<Rational> gb = reduced_groebner(Ideal<Rational>(sh22, gens), kOrd);
        PolyQ f = oracles::random_poly(sh22, 4, 5, rng);
        PolyQ r = normal_form(f, gb.basis(), kOrd);
        CHECK(normal_form(r, gb.basis(), kOrd) == r);
        // f - r lies in the ideal, so both sides share a normal form
        CHECK(ideal_member(f - r, gb));
        // adding a generator multiple never changes the normal form
        PolyQ shifted = f + gens.front() * oracles::random_poly(sh22, 2, 3, rng);
        CHECK(normal_form(shifted, gb.basis(), kOrd) == r);
    }
}

TEST_CASE("reduced basis of the 2x2 family") {
    GroebnerBasis<Rational> gb = reduced_groebner(build_ideal(sh22).ideal(), kOrd);
    REQUIRE(gb.basis().size() == 5);
    CHECK(gb.is_reduced());
    std::vector<std::string> got;
    for (const auto& g : gb.basis()) got.push_back(format_poly(g));
    std::vector<std::string> want = {
        "x[1,2]*x[2,2]",
        "x[1,1]*x[2,1]",
        "x[1,1]*x[1,2] - x[2,1]*x[2,2]",
        "x[2,1]*x[2,2]^2",
        "x[2,1]^2*x[2,2]",
    };
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
}

TEST_CASE("every S-polynomial reduces to zero") {
    auto check_buchberger = [](const GroebnerBasis<Rational>& gb) {
        const auto& B = gb.basis();
        for (std::size_t i = 0; i < B.size(); ++i)
            for (std::size_t j = i + 1; j < B.size(); ++j)
                CHECK(normal_form(s_polynomial(B[i], B[j], gb.order()), B, gb.order()).is_zero());
    };
    check_buchberger(reduced_groebner(build_ideal(sh22).ideal(), kOrd));
    check_buchberger(reduced_groebner(build_ideal(Shape::parse("3x2")).ideal(), kOrd));
    auto rng = oracles::case_rng(0xbcb9);
    for (int k = 0; k < 20; ++k)
        check_buchberger(reduced_groebner(Ideal<Rational>(sh22, random_gens(rng, 3)), kOrd));
}

TEST_CASE("reduced basis is invariant under presentation changes") {
    auto rng = oracles::case_rng(0x9e2a);
    for (int k = 0; k < 50; ++k) {
        std::vector<PolyQ> gens = random_gens(rng, 4);
        auto base = reduced_groebner(Ideal<Rational>(sh22, gens), kOrd).basis();

        std::vector<PolyQ> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(reduced_groebner(Ideal<Rational>(sh22, shuffled), kOrd).basis() == base);

        std::vector<PolyQ> scaled;
        for (const auto& g : gens)
            scaled.push_back(g.scale(Rational(1 + static_cast<long>(rng() % 5), 3)));
        CHECK(reduced_groebner(Ideal<Rational>(sh22, scaled), kOrd).basis() == base);
    }
}

TEST_CASE("membership agrees with degree-sliced linear algebra") {
    std::vector<PolyQ> gens = build_ideal(sh22).generators();
    GroebnerBasis<Rational> gb = reduced_groebner(Ideal<Rational>(sh22, gens), kOrd);
    for (long d = 0; d <= 4; ++d) {
        for (const Monomial& m : oracles::monomials_of_degree(sh22, d)) {
            PolyQ f = PolyQ::term(Rational(1), m);
            CHECK(ideal_member(f, gb) == oracles::linalg_member(f, gens, sh22));
        }
    }
    // a few non-monomial probes
    auto rng = oracles::case_rng(0x11a19);
    for (int k = 0; k < 40; ++k) {
        PolyQ f = oracles::random_homogeneous_poly(sh22, 2 + static_cast<long>(rng() % 3), 4, rng);
        CHECK(ideal_member(f, gb) == oracles::linalg_member(f, gens, sh22));
    }
}

TEST_CASE("staircase counts the quotient dimension") {
    std::vector<PolyQ> gens = build_ideal(sh22).generators();
    GroebnerBasis<Rational> gb = reduced_groebner(Ideal<Rational>(sh22, gens), kOrd);
    std::vector<Monomial> lms = gb.leading_monomials();
    // golden values: 1, 4, 7, 8, then 2d+2 once the socle stabilizes
    CHECK(oracles::hilbert_from_staircase(lms, sh22, 0) == 1);
    CHECK(oracles::hilbert_from_staircase(lms, sh22, 1) == 4);
    CHECK(oracles::hilbert_from_staircase(lms, sh22, 2) == 7);
    CHECK(oracles::hilbert_from_staircase(lms, sh22, 3) == 8);
    CHECK(oracles::hilbert_from_staircase(lms, sh22, 4) == 10);
    CHECK(oracles::hilbert_from_staircase(lms, sh22, 7) == 16);
    for (long d = 0; d <= 5; ++d) {
        long all = static_cast<long>(oracles::monomials_of_degree(sh22, d).size());
        long in_ideal = oracles::ideal_degree_slice(gens, sh22, d).span.rank();
        CHECK(oracles::hilbert_from_staircase(lms, sh22, d) == all - in_ideal);
    }
}

TEST_CASE("intersection and colon goldens") {
    PolyQ x = pp("x[1,1]"), y = pp("x[2,2]");
    Ideal<Rational> ix(sh22, {x}), iy(sh22, {y});
    Ideal<Rational> meet = ideal_intersect(ix, iy);
    CHECK(ideal_equal(meet, Ideal<Rational>(sh22, {pp("x[1,1]*x[2,2]")})));

    Ideal<Rational> I(sh22, {pp("x[1,1]^2*x[1,2]")});
    Ideal<Rational> q = colon(I, Monomial::variable(sh22, VarIndex{1, 1}));
    CHECK(ideal_equal(q, Ideal<Rational>(sh22, {pp("x[1,1]*x[1,2]")})));

    // colon with a coprime monomial returns the ideal itself
    Ideal<Rational> q2 = colon(I, Monomial::variable(sh22, VarIndex{2, 1}));
    CHECK(ideal_equal(q2, I));
}

TEST_CASE("colon by every variable enlarges the family ideal by the witness") {
    Ideal<Rational> I = build_ideal(sh22).ideal();
    Ideal<Rational> saturated = colon_maximal(I);
    std::vector<PolyQ> enlarged = I.generators();
    enlarged.push_back(PolyQ::term(Rational(1), witness_monomial(sh22)));
    CHECK(ideal_equal(saturated, Ideal<Rational>(sh22, enlarged)));
    // the witness is new: strictly larger than the ideal itself
    CHECK_FALSE(ideal_equal(saturated, I));
}

TEST_CASE("interreduction removes redundant generators") {
    std::vector<PolyQ> gens = {pp("x[1,1]"), pp("x[1,1]^2"), pp("x[2,2]"),
                               pp("x[1,1] + x[2,2]")};
    std::vector<PolyQ> slim = interreduce_generators(gens, kOrd);
    CHECK(slim.size() == 2);
    CHECK(ideal_equal(Ideal<Rational>(sh22, gens), Ideal<Rational>(sh22, slim)));
    // idempotent and ideal-preserving on random input
    auto rng = oracles::case_rng(0x5115);
    for (int k = 0; k < 30; ++k) {
        std::vector<PolyQ> g = random_gens(rng, 4);
        std::vector<PolyQ> r = interreduce_generators(g, kOrd);
        CHECK(interreduce_generators(r, kOrd) == r);
        CHECK(ideal_equal(Ideal<Rational>(sh22, g), Ideal<Rational>(sh22, r)));
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::vector<PolyQ> others;
            for (std::size_t j = 0; j < r.size(); ++j)
                if (j != i) others.push_back(r[j]);
            if (!others.empty()) CHECK(normal_form(r[i], others, kOrd) == r[i]);
        }
    }
}

TEST_CASE("prime field bases satisfy the Buchberger criterion") {
    std::vector<PolyFp> gens;
    for (const auto& g : build_ideal(sh22).generators()) {
        std::vector<PolyFp::Term> terms;
        for (const auto& t : g.terms()) terms.push_back({Fp::from_rational(t.coeff, 5), t.mono});
        gens.push_back(PolyFp::from_terms(sh22, kOrd, std::move(terms)));
    }
    GroebnerBasis<Fp> gb = reduced_groebner(Ideal<Fp>(sh22, gens), kOrd);
    CHECK(gb.basis().size() == 5);
    const auto& B = gb.basis();
    for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = i + 1; j < B.size(); ++j)
            CHECK(normal_form(s_polynomial(B[i], B[j], kOrd), B, kOrd).is_zero());
    PolyFp w = PolyFp::term(Fp(1, 5), witness_monomial(sh22));
    CHECK_FALSE(ideal_member(w, gb));
    CHECK(ideal_member(w.mul_mono(Monomial::variable(sh22, VarIndex{1, 1})), gb));
}

TEST_CASE("lex elimination agrees with grevlex membership") {
    Ideal<Rational> I = build_ideal(sh22).ideal();
    GroebnerBasis<Rational> glex = reduced_groebner(I, MonomialOrder::lex());
    GroebnerBasis<Rational> ggrev = reduced_groebner(I, kOrd);
    auto rng = oracles::case_rng(0x1e9);
    for (int k = 0; k < 60; ++k) {
        PolyQ f = oracles::random_poly(sh22, 4, 5, rng);
        CHECK(ideal_member(f, glex) == ideal_member(f, ggrev));
    }
}
