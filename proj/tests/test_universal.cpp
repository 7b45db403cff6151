#include <vector>

#include "doctest.h"
#include "fixtures_common.hpp"
#include "pcoact/errors.hpp"
#include "pcoact/universal.hpp"

using namespace pcoact;

namespace {

LinearMap scale_x_map(const Rational& c) {
    // dual numbers -> dual numbers, 1 -> 1, x -> c x
    LinearMap f = LinearMap::identity(2);
    f.at(1, 1) = c;
    return f;
}

LinearMap kill_x_map() {
    // dual numbers -> dual numbers, 1 -> 1, x -> 0
    LinearMap f(2, 2);
    f.at(0, 0) = 1;
    return f;
}

CoactionMatrix tautological_dmat(const Presentation& pres) {
    // d_{s,i} = delta_{s,i} as elements of Q = P, with U = F (single row)
    CoactionMatrix dm;
    dm.qdim = pres.P.dim;
    dm.d.assign(pres.alphabet(), std::vector<Rational>(dm.qdim, Rational(0)));
    for (std::size_t i = 0; i < pres.cols(); ++i) dm.d[pres.letter(0, i)][i] = 1;
    return dm;
}

} // namespace

TEST_CASE("B(F,F) collapses to the ground field") {
    Presentation pres = build_universal(fixtures::field(), fixtures::field(), 3, 2);
    CHECK(pres.ctx.margin_stable);
    CHECK(pres.ctx.quotient_dims() == std::vector<std::size_t>{1, 0, 0, 0});
    CHECK(pres.psi.size() == 1);
    CHECK(pres.psi[0] == fp_one()); // h_{0,0} == 1

    LinearMap id = LinearMap::identity(1);
    CHECK(verify_bialgebra(pres, id, id).ok());
    CHECK(verify_comodule(pres).ok());
}

TEST_CASE("B(P,F) realizes P itself") {
    for (const auto& P :
         {fixtures::field(), fixtures::dual_numbers(), fixtures::three_dim()}) {
        Presentation pres = build_universal(P, fixtures::field(), 3, 2);
        CHECK(pres.ctx.margin_stable);
        std::size_t total = 0;
        for (auto d : pres.ctx.quotient_dims()) total += d;
        CHECK(total == P.dim);

        // the evaluation map h_{0,i} -> x_i kills all relations
        SolveResult sr = solve_coaction(pres, P, tautological_dmat(pres));
        CHECK(sr.report.ok());
        for (std::size_t i = 0; i < P.dim; ++i) {
            std::vector<Rational> e(P.dim, Rational(0));
            e[i] = 1;
            CHECK(sr.g.images[pres.letter(0, i)] == e);
        }
    }
}

TEST_CASE("comultiplication and counit have the closed forms of the identity pair") {
    Presentation pres = build_universal(fixtures::dual_numbers(), fixtures::dual_numbers(), 3, 2);
    REQUIRE(pres.ctx.margin_stable);
    LinearMap id = LinearMap::identity(2);

    TensorGenMap dm = comultiplication(pres, id);
    REQUIRE(dm.images.size() == 4);
    for (std::size_t t = 0; t < 2; ++t)
        for (std::size_t i = 0; i < 2; ++i) {
            // Delta(h_{t,i}) = sum_s h_{t,s} (x) h_{s,i}
            Tensor2 expect = t2_zero();
            for (std::size_t s = 0; s < 2; ++s)
                expect = [&] {
                    Tensor2 acc = expect;
                    t2_add_scaled(acc,
                                  t2_from(fp_gen(pres.letter(t, s)), fp_gen(pres.letter(s, i))),
                                  Rational(1));
                    return acc;
                }();
            CHECK(dm.images[pres.letter(t, i)] == expect);
        }

    ScalarGenMap em = counit(pres, id);
    for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(em.images[pres.letter(s, i)] == Rational(s == i ? 1 : 0));

    CHECK(verify_descent(pres, dm).ok());
    CHECK(verify_descent(pres, em).ok());
}

TEST_CASE("comultiplication rejects non-homomorphisms") {
    Presentation pres = build_universal(fixtures::dual_numbers(), fixtures::dual_numbers(), 3, 1);
    LinearMap bad(2, 2); // sends the unit to 0
    CHECK_THROWS_AS((void)comultiplication(pres, bad), NotAHomomorphism);
    CHECK_THROWS_AS((void)counit(pres, bad), NotAHomomorphism);
}

TEST_CASE("compatibility holds for the identity pair and fails for a collapsing pair") {
    Presentation pres = build_universal(fixtures::dual_numbers(), fixtures::dual_numbers(), 3, 2);
    LinearMap id = LinearMap::identity(2);
    CHECK(check_compat(pres, id, id));
    // g kills x, so psi o (f o g) loses the x component
    CHECK_FALSE(check_compat(pres, id, kill_x_map()));
}

TEST_CASE("bialgebra and comodule suites pass on the fixtures") {
    struct Case {
        PoissonAlgebraData P;
        std::size_t m;
    };
    for (const auto& [P, m] : {Case{fixtures::field(), 2}, Case{fixtures::dual_numbers(), 2},
                               Case{fixtures::three_dim(), 1}}) {
        Presentation pres = build_universal(P, P, 3, m);
        REQUIRE(pres.ctx.margin_stable);
        LinearMap id = LinearMap::identity(P.dim);
        Report b = verify_bialgebra(pres, id, id);
        CHECK(b.ok());
        Report c = verify_comodule(pres);
        CHECK(c.ok());
        for (const auto& chk : b.checks) CHECK(chk.witness.empty());
    }
}

TEST_CASE("psi sends the unit of P to the unit row") {
    Presentation pres = build_universal(fixtures::dual_numbers(), fixtures::dual_numbers(), 3, 1);
    auto comps = psi_apply(pres, pres.P.unit_vec());
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == fp_one());
    CHECK(comps[1].empty());

    // psi(x) = sum_s y_s (x) nf(h_{s,1})
    std::vector<Rational> x{0, 1};
    auto xc = psi_apply(pres, x);
    CHECK(xc[0] == pres.psi[pres.letter(0, 1)]);
    CHECK(xc[1] == pres.psi[pres.letter(1, 1)]);
}

TEST_CASE("solve_coaction rejects matrices violating a constraint family") {
    Presentation pres = build_universal(fixtures::dual_numbers(), fixtures::field(), 3, 2);
    CoactionMatrix good = tautological_dmat(pres);

    CoactionMatrix bad_unit = good;
    bad_unit.d[pres.letter(0, 0)][1] = 7; // h_{0,0} must map to the unit of Q
    try {
        (void)solve_coaction(pres, fixtures::dual_numbers(), bad_unit);
        FAIL("expected ConstraintViolation");
    } catch (const ConstraintViolation& e) {
        CHECK(e.family == "unit");
    }

    CoactionMatrix bad_mul = good;
    bad_mul.d[pres.letter(0, 1)][0] = 1; // x -> 1 + x breaks x^2 = 0
    CHECK_THROWS_AS((void)solve_coaction(pres, fixtures::dual_numbers(), bad_mul),
                    ConstraintViolation);
}

TEST_CASE("theta and theta_inv are mutually inverse") {
    Presentation pres = build_universal(fixtures::dual_numbers(), fixtures::field(), 3, 2);
    PoissonAlgebraData Q = fixtures::dual_numbers();
    CoactionMatrix dm = tautological_dmat(pres);

    AlgGenMap g = theta_inv(pres, Q, dm);
    CoactionMatrix back = theta(pres, Q, g);
    CHECK(back.qdim == dm.qdim);
    CHECK(back.d == dm.d);

    AlgGenMap again = theta_inv(pres, Q, back);
    CHECK(again.images == g.images);
}

TEST_CASE("induced maps respect identities and composition") {
    Presentation dualF = build_universal(fixtures::dual_numbers(), fixtures::field(), 3, 2);
    Presentation fieldF = build_universal(fixtures::field(), fixtures::field(), 3, 2);

    // covariant: identity on X induces the identity on generators
    LinearMap id2 = LinearMap::identity(2);
    FpGenMap lid = induced_map_L(dualF, dualF, id2);
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(lid.images[dualF.letter(0, i)] == fp_gen(dualF.letter(0, i)));

    // covariant composition: induced(g o f) = induced(g) after induced(f)
    LinearMap f = scale_x_map(Rational(2));
    LinearMap g = scale_x_map(Rational(-3));
    FpGenMap lf = induced_map_L(dualF, dualF, f);
    FpGenMap lg = induced_map_L(dualF, dualF, g);
    FpGenMap lgf = induced_map_L(dualF, dualF, compose_hom(g, f));
    for (std::size_t i = 0; i < 2; ++i) {
        FpOps ops{&lg.images};
        CHECK(eval_fp(lf.images[dualF.letter(0, i)], ops) == lgf.images[dualF.letter(0, i)]);
    }

    // chain dual -> dual -> F through the unital projection
    LinearMap proj(2, 1); // dual numbers -> F, 1 -> 1, x -> 0
    proj.at(0, 0) = 1;
    FpGenMap lproj = induced_map_L(dualF, fieldF, proj);
    CHECK(lproj.images[dualF.letter(0, 0)] == fp_gen(fieldF.letter(0, 0)));
    CHECK(lproj.images[dualF.letter(0, 1)].empty());

    // contravariant: for incl: F -> dual numbers, B(dual,dual) -> B(dual,F)
    Presentation dualDual = build_universal(fixtures::dual_numbers(), fixtures::dual_numbers(), 3, 2);
    LinearMap incl(1, 2); // F -> dual numbers
    incl.at(0, 0) = 1;
    FpGenMap r = induced_map_R(dualDual, dualF, incl);
    for (std::size_t i = 0; i < 2; ++i) {
        // h_{u,i} -> sum_v incl_{uv} k_{v,i}; only u = 0 survives
        CHECK(r.images[dualDual.letter(0, i)] == fp_gen(dualF.letter(0, i)));
        CHECK(r.images[dualDual.letter(1, i)].empty());
    }
}

TEST_CASE("induced_map_L verifies descent and rejects non-homomorphisms") {
    Presentation dualF = build_universal(fixtures::dual_numbers(), fixtures::field(), 3, 2);
    LinearMap bad(2, 2); // not unital
    CHECK_THROWS_AS((void)induced_map_L(dualF, dualF, bad), NotAHomomorphism);
}
