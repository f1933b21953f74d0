#include <random>

#include "doctest.h"
#include "lk/polyform.hpp"

using namespace lk;

namespace {

PolyForm random_form(std::mt19937_64& rng, int m, int deg, int maxexp = 2,
                     int nterms = 3) {
    std::uniform_int_distribution<long> cnum(-4, 4), cden(1, 3);
    std::uniform_int_distribution<int> e(0, maxexp);
    PolyForm f(m);
    for (int t = 0; t < nterms; ++t) {
        std::vector<int> exps(m);
        for (auto& x : exps) x = e(rng);
        std::vector<int> all(m);
        for (int i = 0; i < m; ++i) all[i] = i;
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<int> dts(all.begin(), all.begin() + deg);
        std::sort(dts.begin(), dts.end());
        f.add_term(exps, dts, Scalar(cnum(rng), cden(rng)));
    }
    return f;
}

AffineMap random_vertex_map(std::mt19937_64& rng, int sdim, int tdim) {
    std::uniform_int_distribution<int> v(0, tdim);
    std::vector<int> verts(sdim + 1);
    for (auto& x : verts) x = v(rng);
    return AffineMap::from_vertex_map(sdim, tdim, verts);
}

}  // namespace

TEST_CASE("differential and wedge basics") {
    PolyForm t1 = PolyForm::coordinate(2, 0);
    PolyForm dt1 = PolyForm::differential(2, 0);
    PolyForm dt2 = PolyForm::differential(2, 1);
    CHECK(d(t1) == dt1);
    CHECK(d(d(t1 * t1 * PolyForm::coordinate(2, 1))).is_zero());

    // wedge(t1 dt2, dt1) = -t1 dt1^dt2
    PolyForm w = wedge(t1 * dt2, dt1);
    PolyForm expect = PolyForm::monomial(2, {1, 0}, {0, 1}, Scalar(-1));
    CHECK(w == expect);

    // normal form oracle: sort dt1 past dt2 costs one transposition
    CHECK(wedge(dt2, dt1) == PolyForm::monomial(2, {0, 0}, {0, 1}, Scalar(-1)));
    CHECK(wedge(dt1, dt1).is_zero());
}

TEST_CASE("pullback basics") {
    // top degree dies on a lower-dimensional source
    PolyForm top = wedge(PolyForm::differential(2, 0), PolyForm::differential(2, 1));
    for (int v0 = 0; v0 <= 2; ++v0)
        for (int v1 = 0; v1 <= 2; ++v1) {
            AffineMap phi = AffineMap::from_vertex_map(1, 2, {v0, v1});
            CHECK(pullback(top, phi).is_zero());
        }

    // facet i is where t_i vanishes: t1 pulls back to 0 on facet 1, to the
    // edge coordinate on facet 2, and to 1 - u on facet 0
    PolyForm t1 = PolyForm::coordinate(2, 0);
    CHECK(pullback(t1, AffineMap::face(1, 2)).is_zero());
    CHECK(pullback(t1, AffineMap::face(2, 2)) == PolyForm::coordinate(1, 0));
    CHECK(pullback(t1, AffineMap::face(0, 2)) ==
          PolyForm::constant(1, Scalar(1)) - PolyForm::coordinate(1, 0));
}

TEST_CASE("pullback functoriality and simplicial identities") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 40; ++iter) {
        int mtop = 2 + (int)(rng() % 2);  // 2 or 3
        int mmid = 1 + (int)(rng() % mtop);
        int msrc = 1 + (int)(rng() % mmid);
        int deg = (int)(rng() % (msrc + 1));
        PolyForm w = random_form(rng, mtop, deg);
        AffineMap psi = random_vertex_map(rng, mmid, mtop);
        AffineMap phi = random_vertex_map(rng, msrc, mmid);
        CHECK(pullback(pullback(w, psi), phi) == pullback(w, psi.compose(phi)));
    }
    // d_i d_j = d_{j-1} d_i on induced pullbacks (i < j)
    std::mt19937_64 rng2(7);
    for (int m = 2; m <= 4; ++m)
        for (int j = 1; j <= m; ++j)
            for (int i = 0; i < j; ++i) {
                PolyForm w = random_form(rng2, m, std::min(m - 2, 1), 2, 2);
                PolyForm a = restrict_to_facet(restrict_to_facet(w, j), i);
                PolyForm b = restrict_to_facet(restrict_to_facet(w, i), j - 1);
                CHECK(a == b);
            }
}

TEST_CASE("Leibniz rule on randomized inputs") {
    std::mt19937_64 rng(5150);
    for (int iter = 0; iter < 60; ++iter) {
        int m = 2 + (int)(rng() % 3);  // up to 4
        int da = (int)(rng() % std::min(m, 3));
        int db = (int)(rng() % std::min(m, 3));
        PolyForm a = random_form(rng, m, da);
        PolyForm b = random_form(rng, m, db);
        PolyForm lhs = d(wedge(a, b));
        PolyForm rhs = wedge(d(a), b);
        PolyForm sgn = wedge(a, d(b));
        rhs += (da % 2) ? -sgn : sgn;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("contraction") {
    // contract(dt1, v) picks the dt1-dual component
    std::vector<PolyForm> v{PolyForm::constant(2, Scalar(7)),
                            PolyForm::coordinate(2, 1)};
    CHECK(contract(PolyForm::differential(2, 0), v) == PolyForm::constant(2, Scalar(7)));
    // 0-forms contract to zero
    CHECK(contract(PolyForm::coordinate(2, 0), v).is_zero());

    // v_I for I = {0,1}, j = 0 on the triangle: p_I(t) = (0, t2), so
    // v = (t1, 0) and iota_v(dt1^dt2) = t1 dt2  (coordinate expansion oracle)
    auto vI = collapse_vector_field(2, {0, 1}, 0);
    CHECK(vI[0] == PolyForm::coordinate(2, 0));
    CHECK(vI[1].is_zero());
    PolyForm top = wedge(PolyForm::differential(2, 0), PolyForm::differential(2, 1));
    CHECK(contract(top, vI) ==
          PolyForm::coordinate(2, 0) * PolyForm::differential(2, 1));
}

TEST_CASE("parameter integration") {
    // family constant in s (2 vars: t1 plus parameter)
    PolyForm fam(2);
    fam.add_term({1, 0}, {0}, Scalar(3));
    CHECK(s_integral(fam) == PolyForm::monomial(1, {1}, {0}, Scalar(3)));

    // s * dt1 integrates to dt1/2
    PolyForm sdt(2);
    sdt.add_term({0, 1}, {0}, Scalar(1));
    CHECK(s_integral(sdt) == PolyForm::monomial(1, {0}, {0}, Scalar(1, 2)));

    // full flow integrand for I = {0,1}, j = 0, beta = dt1^dt2 on the
    // triangle: (p_I^s)* iota_{v_I} beta = s t1 dt2; integrating the
    // parameter gives t1 dt2 / 2  (monomial-wise oracle: int_0^1 s ds = 1/2)
    PolyForm beta = wedge(PolyForm::differential(2, 0), PolyForm::differential(2, 1));
    AffineMap pI = AffineMap::collapse(2, {0, 1}, 0);
    AffineMap id = AffineMap::identity(2);
    AffineMap A1 = id;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k <= 2; ++k) A1.coeff[i][k] = id.coeff[i][k] - pI.coeff[i][k];
    PolyForm integrand = pullback_s(contract(beta, collapse_vector_field(2, {0, 1}, 0)), pI, A1);
    PolyForm expected_integrand(3);
    expected_integrand.add_term({1, 0, 1}, {1}, Scalar(1));  // s * t1 * dt2
    CHECK(integrand == expected_integrand);
    CHECK(s_integral(integrand) == PolyForm::monomial(2, {1, 0}, {1}, Scalar(1, 2)));
}

TEST_CASE("simplex periods") {
    PolyForm top2 = wedge(PolyForm::differential(2, 0), PolyForm::differential(2, 1));
    CHECK(simplex_period(top2) == Scalar(1, 2));
    CHECK(simplex_period(PolyForm::zero(3)) == Scalar());
    PolyForm t1dt1 = PolyForm::monomial(1, {1}, {0}, Scalar(1));
    CHECK(simplex_period(t1dt1) == Scalar(1, 2));
    CHECK_THROWS_AS(simplex_period(PolyForm::coordinate(2, 0)), std::invalid_argument);
}

TEST_CASE("Stokes on the simplex") {
    std::mt19937_64 rng(90210);
    for (int m = 1; m <= 3; ++m)
        for (int iter = 0; iter < 25; ++iter) {
            PolyForm w = random_form(rng, m, m - 1);
            Scalar lhs = simplex_period(d(w));
            Scalar rhs;
            for (int i = 0; i <= m; ++i) {
                Scalar p = simplex_period(restrict_to_facet(w, i));
                rhs += (i % 2) ? -p : p;
            }
            CHECK(lhs == rhs);
        }
}

TEST_CASE("horn extension without beta") {
    // zero family extends to zero
    FormHorn zf;
    zf.m = 2;
    zf.j = 0;
    zf.facets[1] = PolyForm::zero(1);
    zf.facets[2] = PolyForm::zero(1);
    CHECK(horn_extend_form(zf, std::nullopt, std::nullopt).is_zero());

    // closed 1-form family {c * dt} on the edges of Lambda[2,0]
    FormHorn cf;
    cf.m = 2;
    cf.j = 0;
    cf.facets[1] = PolyForm::differential(1, 0).scaled(Scalar(3));
    cf.facets[2] = PolyForm::differential(1, 0).scaled(Scalar(-5, 2));
    PolyForm ext = horn_extend_form(cf, std::nullopt, std::nullopt);
    CHECK(d(ext).is_zero());
    CHECK(restrict_to_facet(ext, 1) == cf.facets[1]);
    CHECK(restrict_to_facet(ext, 2) == cf.facets[2]);

    // randomized: restriction families of global forms extend to something
    // with the right restrictions
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 30; ++iter) {
        int m = 2 + (int)(rng() % 2);
        int j = (int)(rng() % (m + 1));
        int deg = (int)(rng() % m);
        PolyForm w = random_form(rng, m, deg);
        FormHorn fam = FormHorn::restriction(w, m, j);
        PolyForm e = horn_extend_form(fam, std::nullopt, std::nullopt);
        for (auto& [i, f] : fam.facets) CHECK(restrict_to_facet(e, i) == f);
    }
}

TEST_CASE("horn extension with beta solves d(ext) = beta") {
    // m=2, j=0, alpha = 0, beta = dt1^dt2; frozen derived value
    FormHorn zf;
    zf.m = 2;
    zf.j = 0;
    zf.facets[1] = PolyForm::zero(1);
    zf.facets[2] = PolyForm::zero(1);
    PolyForm beta = wedge(PolyForm::differential(2, 0), PolyForm::differential(2, 1));
    PolyForm ext = horn_extend_form(zf, beta, std::nullopt);
    CHECK(d(ext) == beta);
    CHECK(restrict_to_facet(ext, 1).is_zero());
    CHECK(restrict_to_facet(ext, 2).is_zero());
    PolyForm frozen(2);  // (t1 dt2 - t2 dt1)/2, from the flow-transport formula
    frozen.add_term({1, 0}, {1}, Scalar(1, 2));
    frozen.add_term({0, 1}, {0}, Scalar(-1, 2));
    CHECK(ext == frozen);

    // randomized: family = restriction of w, beta = dw
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 25; ++iter) {
        int m = 2 + (int)(rng() % 2);
        int j = (int)(rng() % (m + 1));
        int deg = (int)(rng() % std::min(m, 2));
        PolyForm w = random_form(rng, m, deg);
        PolyForm beta_r = d(w);
        FormHorn fam = FormHorn::restriction(w, m, j);
        PolyForm e = horn_extend_form(fam, beta_r, std::nullopt);
        CHECK(d(e) == beta_r);
        for (auto& [i, f] : fam.facets) CHECK(restrict_to_facet(e, i) == f);
    }

    // mismatch error: beta = 0 but the family is not closed on the facets
    FormHorn fam2 = FormHorn::restriction(PolyForm::coordinate(2, 0), 2, 0);
    CHECK_THROWS_AS(horn_extend_form(fam2, PolyForm::zero(2), std::nullopt),
                    std::invalid_argument);
}

TEST_CASE("pinned horn extension is a section through its pin") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 20; ++iter) {
        int m = 2 + (int)(rng() % 2);
        int j = (int)(rng() % (m + 1));
        int deg = (int)(rng() % std::min(m, 2));
        PolyForm w0 = random_form(rng, m, deg);
        HornExtensionPin pin{FormHorn::restriction(w0, m, j), w0};

        // the pin itself is reproduced exactly (with and without beta)
        PolyForm back = horn_extend_form(pin.horn0, std::nullopt, pin);
        CHECK(back == w0);
        PolyForm back_b = horn_extend_form(pin.horn0, d(w0), pin);
        CHECK(back_b == w0);

        // other inputs still restrict correctly; with beta = d(w0 + d(chi))
        // = d(w0), the pinned solve keeps the differential postcondition
        PolyForm chi = random_form(rng, m, deg == 0 ? 0 : deg - 1);
        PolyForm w1 = w0 + d(chi);
        FormHorn fam1 = FormHorn::restriction(w1, m, j);
        PolyForm e1 = horn_extend_form(fam1, d(w0), pin);
        CHECK(d(e1) == d(w0));
        for (auto& [i, f] : fam1.facets) CHECK(restrict_to_facet(e1, i) == f);
    }
}

TEST_CASE("horn compatibility errors") {
    FormHorn bad;
    bad.m = 2;
    bad.j = 1;
    bad.facets[0] = PolyForm::constant(1, Scalar(5));  // 0-forms disagree at shared vertex
    bad.facets[2] = PolyForm::zero(1);
    CHECK_THROWS_AS(horn_extend_form(bad, std::nullopt, std::nullopt),
                    std::invalid_argument);
}
