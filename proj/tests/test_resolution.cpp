#include <doctest.h>

#include "oracles.hpp"
#include "slicecert/resolution.hpp"
#include "slicecert/text_io.hpp"

using namespace slicecert;

namespace {
const Shape sh22 = Shape::parse("2x2");
const MonomialOrder kOrd = MonomialOrder::grevlex();

PolyQ pp(const std::string& s) { return parse_poly(s, sh22); }

template <typename K>
bool mats_equal(const PolyMatrix<K>& a, const PolyMatrix<K>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.at(r, c) != b.at(r, c)) return false;
    return true;
}

void check_complex(const FreeResolution<Rational>& F) {
    for (std::size_t k = 0; k + 1 < F.length(); ++k)
        CHECK(F.diffs[k].multiply(F.diffs[k + 1]).is_zero());
    for (std::size_t k = 0; k < F.length(); ++k) {
        CHECK(F.diffs[k].rows() == F.modules[k].rank());
        CHECK(F.diffs[k].cols() == F.modules[k + 1].rank());
    }
}

VectorPoly<Rational> vp(std::vector<PolyQ> comp) { return VectorPoly<Rational>{std::move(comp)}; }
}  // namespace

TEST_CASE("matrix plumbing") {
    PolyMatrix<Rational> m(sh22, kOrd, 2, 2);
    m.set(0, 0, pp("x[1,1]"));
    m.set(0, 1, pp("x[1,2]"));
    m.set(1, 1, pp("x[2,2]"));
    CHECK_FALSE(m.is_zero());
    CHECK(m.at(1, 0).is_zero());

    PolyMatrix<Rational> v(sh22, kOrd, 2, 1);
    v.set(0, 0, pp("x[2,1]"));
    v.set(1, 0, pp("1"));
    PolyMatrix<Rational> prod = m.multiply(v);
    CHECK(prod.rows() == 2);
    CHECK(prod.cols() == 1);
    CHECK(prod.at(0, 0) == pp("x[1,1]*x[2,1] + x[1,2]"));
    CHECK(prod.at(1, 0) == pp("x[2,2]"));
    CHECK_THROWS_AS(v.multiply(m), std::invalid_argument);

    PolyMatrix<Rational> dr = m.drop_row(0);
    CHECK(dr.rows() == 1);
    CHECK(dr.at(0, 1) == pp("x[2,2]"));
    PolyMatrix<Rational> dc = m.drop_col(1);
    CHECK(dc.cols() == 1);
    CHECK(dc.at(0, 0) == pp("x[1,1]"));

    Shape sh23 = Shape::parse("2x3");
    CHECK_THROWS_AS(m.set(0, 0, parse_poly("x[1,1]", sh23)), std::invalid_argument);
}

TEST_CASE("module normal form trace reassembles and strips divisible leads") {
    auto rng = oracles::case_rng(0x30d0f);
    std::vector<VectorPoly<Rational>> basis = {
        vp({pp("x[1,1]"), pp("x[2,1]")}),
        vp({pp("0"), pp("x[2,2]^2")}),
    };
    for (int k = 0; k < 100; ++k) {
        VectorPoly<Rational> v =
            vp({oracles::random_poly(sh22, 4, 5, rng), oracles::random_poly(sh22, 4, 5, rng)});
        ModNFResult<Rational> nf = mod_normal_form_trace(v, basis, kOrd);
        VectorPoly<Rational> rebuilt = nf.remainder;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t r = 0; r < 2; ++r)
                rebuilt.comp[r] = rebuilt.comp[r] + nf.quotients[i] * basis[i].comp[r];
        }
        CHECK(rebuilt == v);
        // remainder terms in a component are not divisible by a basis lead there
        for (std::size_t c = 0; c < 2; ++c)
            for (const auto& t : nf.remainder.comp[c].terms())
                for (const auto& b : basis)
                    if (b.lead_comp() == static_cast<int>(c))
                        CHECK_FALSE(
                            mono_divides(b.comp[c].leading_monomial(), t.mono));
    }
}

TEST_CASE("module bases carry faithful representations") {
    auto rng = oracles::case_rng(0x6b6b);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<VectorPoly<Rational>> inputs;
        while (inputs.size() < 3) {
            VectorPoly<Rational> v = vp(
                {oracles::random_poly(sh22, 2, 3, rng), oracles::random_poly(sh22, 2, 3, rng)});
            if (!v.is_zero()) inputs.push_back(std::move(v));
        }
        ModuleGB<Rational> gb = module_buchberger(inputs, kOrd);
        REQUIRE(gb.input_count == inputs.size());
        REQUIRE(gb.basis.size() >= inputs.size());
        // every basis element expands through its representation row
        for (std::size_t j = 0; j < gb.basis.size(); ++j) {
            VectorPoly<Rational> expanded = vp_zero<Rational>(sh22, kOrd, 2);
            for (std::size_t i = 0; i < inputs.size(); ++i)
                for (std::size_t r = 0; r < 2; ++r)
                    expanded.comp[r] = expanded.comp[r] + gb.rep[j][i] * inputs[i].comp[r];
            CHECK(expanded == gb.basis[j]);
        }
        // Buchberger criterion: same-component S-pairs reduce to zero
        for (std::size_t a = 0; a < gb.basis.size(); ++a)
            for (std::size_t b = a + 1; b < gb.basis.size(); ++b) {
                int lc = gb.basis[a].lead_comp();
                if (gb.basis[b].lead_comp() != lc) continue;
                const Monomial& la = gb.basis[a].comp[lc].leading_monomial();
                const Monomial& lb = gb.basis[b].comp[lc].leading_monomial();
                Monomial L = mono_lcm(la, lb);
                VectorPoly<Rational> S =
                    gb.basis[a].mul_term(gb.basis[a].comp[lc].leading_coeff().inv(),
                                         *mono_divide(L, la)) -
                    gb.basis[b].mul_term(gb.basis[b].comp[lc].leading_coeff().inv(),
                                         *mono_divide(L, lb));
                if (S.is_zero()) continue;
                CHECK(mod_normal_form_trace(S, gb.basis, kOrd).remainder.is_zero());
            }
    }
    std::vector<VectorPoly<Rational>> mixed = {vp({pp("x[1,1]")}), vp({pp("0"), pp("x[1,1]")})};
    CHECK_THROWS_AS(module_buchberger(mixed, kOrd), std::invalid_argument);
    std::vector<VectorPoly<Rational>> zeros = {vp({pp("0")})};
    CHECK_THROWS_AS(module_buchberger(zeros, kOrd), std::invalid_argument);
}

TEST_CASE("the syzygy of two variables is the Koszul relation") {
    std::vector<VectorPoly<Rational>> cols = {vp({pp("x[1,1]")}), vp({pp("x[2,2]")})};
    std::vector<VectorPoly<Rational>> syz = syzygies_of(cols, kOrd);
    REQUIRE(syz.size() == 1);
    CHECK(syz[0].comp[0] == pp("x[2,2]"));
    CHECK(syz[0].comp[1] == pp("-x[1,1]"));
}

TEST_CASE("minimal generator pruning by degree") {
    std::vector<VectorPoly<Rational>> cols = {vp({pp("x[1,1]")}), vp({pp("x[1,1]^2")}),
                                              vp({pp("x[2,2]")})};
    std::vector<VectorPoly<Rational>> kept = minimal_generators(cols, {0}, kOrd);
    REQUIRE(kept.size() == 2);
    CHECK(kept[0].comp[0] == pp("x[1,1]"));
    CHECK(kept[1].comp[0] == pp("x[2,2]"));

    // a redundant combination of earlier elements is dropped regardless of position
    std::vector<VectorPoly<Rational>> cols2 = {vp({pp("x[1,1] + x[2,2]")}), vp({pp("x[2,2]")}),
                                               vp({pp("x[1,1]")})};
    CHECK(minimal_generators(cols2, {0}, kOrd).size() == 2);
}

TEST_CASE("Koszul resolutions of regular sequences") {
    Ideal<Rational> two(sh22, {pp("x[1,1]"), pp("x[2,2]")});
    FreeResolution<Rational> k2 = free_resolution(two, 8);
    CHECK(k2.length() == 2);
    CHECK(k2.minimal);
    CHECK_FALSE(k2.truncated);
    check_complex(k2);
    CHECK(k2.modules[1].degrees == std::vector<long>{1, 1});
    CHECK(k2.modules[2].degrees == std::vector<long>{2});
    CHECK(verify_exact(k2, 6));
    BettiTable b2 = betti(k2);
    CHECK(b2.at(0, 0) == 1);
    CHECK(b2.at(1, 1) == 2);
    CHECK(b2.at(2, 2) == 1);
    CHECK(b2.projdim() == 2);

    Ideal<Rational> three(sh22, {pp("x[1,1]"), pp("x[1,2]"), pp("x[2,1]")});
    FreeResolution<Rational> k3 = free_resolution(three, 8);
    CHECK(k3.length() == 3);
    check_complex(k3);
    BettiTable b3 = betti(k3);
    CHECK(b3.total(0) == 1);
    CHECK(b3.total(1) == 3);
    CHECK(b3.total(2) == 3);
    CHECK(b3.total(3) == 1);
    CHECK(verify_exact(k3, 6));

    FreeResolution<Rational> k1 =
        free_resolution(Ideal<Rational>(sh22, {pp("x[1,1]*x[2,2]")}), 8);
    CHECK(k1.length() == 1);
    CHECK(betti(k1).at(1, 2) == 1);
    CHECK(betti(k1).projdim() == 1);
}

TEST_CASE("resolution of the smallest family ideal") {
    FreeResolution<Rational> res = free_resolution(build_ideal(sh22).ideal(), 8);
    CHECK(res.minimal);
    CHECK_FALSE(res.truncated);
    CHECK(res.length() == 4);
    check_complex(res);
    CHECK(verify_exact(res, 9));

    BettiTable b = betti(res);
    CHECK(b.projdim() == 4);
    CHECK(b.at(0, 0) == 1);
    CHECK(b.at(1, 2) == 3);
    CHECK(b.at(2, 4) == 5);
    CHECK(b.at(3, 5) == 4);
    CHECK(b.at(4, 6) == 1);
    CHECK(b.total(2) == 5);
    // the socle generator sits in the witness degree
    CHECK(res.modules[4].degrees == std::vector<long>{6});

    std::string grid = b.grid();
    CHECK(grid.find("total: 1 3 5 4 1") != std::string::npos);
    CHECK(BettiTable{}.grid() == "empty\n");
}

TEST_CASE("resolutions of the six-variable shapes") {
    FreeResolution<Rational> r32 = free_resolution(build_ideal(Shape::parse("3x2")).ideal(), 8);
    CHECK(r32.minimal);
    CHECK(r32.length() == 6);
    check_complex(r32);
    BettiTable b32 = betti(r32);
    std::vector<long> want32 = {1, 4, 12, 20, 16, 6, 1};
    for (long i = 0; i <= 6; ++i) CHECK(b32.total(i) == want32[static_cast<std::size_t>(i)]);

    FreeResolution<Rational> r23 = free_resolution(build_ideal(Shape::parse("2x3")).ideal(), 8);
    CHECK(r23.length() == 6);
    BettiTable b23 = betti(r23);
    std::vector<long> want23 = {1, 4, 12, 19, 15, 6, 1};
    for (long i = 0; i <= 6; ++i) CHECK(b23.total(i) == want23[static_cast<std::size_t>(i)]);
}

TEST_CASE("truncation is reported, not silently ignored") {
    FreeResolution<Rational> cut = free_resolution(build_ideal(sh22).ideal(), 2);
    CHECK(cut.truncated);
    CHECK_FALSE(cut.minimal);
    CHECK(cut.length() == 2);
    CHECK_THROWS_AS(betti(cut), std::invalid_argument);

    CHECK_THROWS_AS(free_resolution(build_ideal(sh22).ideal(), 0), std::invalid_argument);
    CHECK_THROWS_AS(
        free_resolution(Ideal<Rational>(sh22, {pp("x[1,1] + x[1,1]^2")}), 4),
        std::invalid_argument);
}

TEST_CASE("Taylor complexes resolve monomial ideals") {
    Ideal<Rational> I(sh22, {pp("x[1,1]^2"), pp("x[1,1]*x[2,2]")});
    FreeResolution<Rational> T = taylor_complex(I);
    CHECK(T.length() == 2);
    CHECK_FALSE(T.minimal);
    CHECK(T.modules[1].rank() == 2);
    CHECK(T.modules[2].rank() == 1);
    check_complex(T);
    CHECK(verify_exact(T, 8));

    // already minimal: no unit entries, so cancellation changes nothing
    FreeResolution<Rational> M = minimalize(T);
    CHECK(M.minimal);
    CHECK(M.length() == 2);
    CHECK(mats_equal(M.diffs[0], T.diffs[0]));
    CHECK(mats_equal(M.diffs[1], T.diffs[1]));
    CHECK(betti(M).total(1) == 2);

    // nested generators force a unit, and cancellation removes the pair
    Ideal<Rational> J(sh22, {pp("x[1,1]^2"), pp("x[1,1]^2*x[2,2]")});
    FreeResolution<Rational> TJ = taylor_complex(J);
    CHECK(verify_exact(TJ, 8));
    FreeResolution<Rational> MJ = minimalize(TJ);
    CHECK(MJ.length() == 1);
    CHECK(MJ.modules[1].degrees == std::vector<long>{2});
    CHECK(MJ.diffs[0].at(0, 0) == pp("x[1,1]^2"));
    CHECK(verify_exact(MJ, 8));
    // idempotent
    FreeResolution<Rational> MJ2 = minimalize(MJ);
    CHECK(MJ2.length() == 1);
    CHECK(mats_equal(MJ2.diffs[0], MJ.diffs[0]));

    CHECK_THROWS_AS(taylor_complex(build_ideal(sh22).ideal()), std::invalid_argument);
}

TEST_CASE("cancelling a padded trivial pair restores the original") {
    Ideal<Rational> two(sh22, {pp("x[1,1]"), pp("x[2,2]")});
    FreeResolution<Rational> k = free_resolution(two, 8);
    REQUIRE(k.length() == 2);

    FreeResolution<Rational> padded = k;
    padded.minimal = false;
    padded.modules[1].degrees.push_back(3);
    padded.modules[2].degrees.push_back(3);
    PolyMatrix<Rational> d1(sh22, kOrd, 1, 3);
    for (std::size_t c = 0; c < 2; ++c) d1.set(0, c, k.diffs[0].at(0, c));
    PolyMatrix<Rational> d2(sh22, kOrd, 3, 2);
    for (std::size_t r = 0; r < 2; ++r) d2.set(r, 0, k.diffs[1].at(r, 0));
    d2.set(2, 1, pp("1"));
    padded.diffs[0] = d1;
    padded.diffs[1] = d2;

    check_complex(padded);
    CHECK(verify_exact(padded, 5));
    FreeResolution<Rational> restored = minimalize(padded);
    CHECK(restored.minimal);
    REQUIRE(restored.length() == 2);
    CHECK(restored.modules == k.modules);
    CHECK(mats_equal(restored.diffs[0], k.diffs[0]));
    CHECK(mats_equal(restored.diffs[1], k.diffs[1]));
}

TEST_CASE("strand ranks count graded images") {
    PolyMatrix<Rational> M(sh22, kOrd, 1, 2);
    M.set(0, 0, pp("x[1,1]"));
    M.set(0, 1, pp("x[2,2]"));
    CHECK(strand_rank(M, 1, {0}, {1, 1}) == 2);
    CHECK(strand_rank(M, 0, {0}, {1, 1}) == 0);
    // degree 2: multiples of x[1,1] or x[2,2], 7 of the 10 monomials
    CHECK(strand_rank(M, 2, {0}, {1, 1}) == 7);
    // wrong source degrees surface once the strand engages a column
    CHECK_THROWS_AS(strand_rank(M, 2, {0}, {2, 2}), std::invalid_argument);

    // a lone non-injective map is a complex but not a resolution
    FreeResolution<Rational> bad{sh22, kOrd,
                                 {FreeModule{{0}}, FreeModule{{1, 1}}},
                                 {M},
                                 false,
                                 false};
    CHECK_FALSE(verify_exact(bad, 2));
}

TEST_CASE("counting helpers") {
    CHECK(monomial_count(sh22, 0) == 1);
    CHECK(monomial_count(sh22, 1) == 4);
    CHECK(monomial_count(sh22, 2) == 10);
    CHECK(monomial_count(sh22, -1) == 0);
    CHECK(exponent_rows(2, 2) ==
          std::vector<std::vector<long>>{{0, 2}, {1, 1}, {2, 0}});
    CHECK(exponent_rows(4, 3).size() == monomial_count(sh22, 3));
    CHECK(exponent_rows(0, 0) == std::vector<std::vector<long>>{{}});
    CHECK(exponent_rows(0, 2).empty());
}

TEST_CASE("projective dimension via the depth-zero certificate") {
    DepthZeroCertificate cert = certify_depth_zero(sh22, ColonMode::Exchange);
    REQUIRE(cert.verdict);
    CHECK(ab_projdim(sh22, cert) == 4);
    CHECK_THROWS_AS(ab_projdim(Shape::parse("3x2"), cert), std::invalid_argument);

    DepthZeroCertificate failed{sh22, ColonMode::Exchange, {}, Rational(0), false, {}, {}, false};
    CHECK_THROWS_AS(ab_projdim(sh22, failed), std::invalid_argument);
}
