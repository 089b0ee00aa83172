#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "defc/classical.hpp"
#include "defc/engine.hpp"
#include "defc/sampling.hpp"
#include "defc/suites.hpp"

using namespace defc;

static Cochain iso_pair(const AlgebraInstance& a, int degree, const MultiMap& first,
                        const MultiMap& second)
{
    Cochain c = zero_cochain(ModelId::Iso, degree);
    if (!first.is_zero())
        c.set({GenFamily::F, degree - 1}, first);
    if (!second.is_zero())
        c.set({GenFamily::G, degree - 1}, second);
    (void)a;
    return c;
}

TEST_CASE("l_0 over the trivial iso diagram is the identity pair")
{
    AlgebraInstance a = iso_trivial2();
    Cochain l0 = l_zero(a);
    CHECK(l0.degree == 2);
    CHECK(l0.value({GenFamily::F, 1}, a.spaces) == MultiMap::identity(a.spaces, Color::B));
    CHECK(l0.value({GenFamily::G, 1}, a.spaces) == MultiMap::identity(a.spaces, Color::W));
}

TEST_CASE("l_0 vanishes on strict iso instances and is refused elsewhere")
{
    Rng rng(5);
    AlgebraInstance a = iso_random2(rng);
    CHECK(l_zero(a).is_zero());
    AlgebraInstance b = assoc_pair2();
    CHECK_THROWS(l_k(std::vector<const Cochain*>{}, b));
}

TEST_CASE("engine l_1 equals the differential closed form over assoc morphisms")
{
    // l_1(theta)(mu_{n+1}) = (-1)^{n+1} b theta_U on the one-dimensional algebra
    AlgebraInstance a = assoc_one_dim();
    for (int n = 1; n <= 3; ++n) {
        Cochain th = zero_cochain(ModelId::AssocMorphism, n);
        MultiMap tU = MultiMap::zero(a.spaces, Color::B, std::vector<Color>(n + 1, Color::B));
        tU.coeffs()[0] = Rational(1);
        th.set({GenFamily::Mu, n + 1}, tU);
        Cochain d = delta(th, a);
        MultiMap got = d.value({GenFamily::Mu, n + 2}, a.spaces);
        MultiMap want = sign_pow(n + 2) * hochschild_b(tU, module_uu(a.map("mu_U")));
        CHECK(got == want);
    }
}

TEST_CASE("substitution and evaluation")
{
    AlgebraInstance a = assoc_one_dim();
    const ModelTable& tbl = model_table(ModelId::AssocMorphism);
    const FormalSum& d = tbl.differential({GenFamily::Mu, 4});
    Rng rng(3);
    Cochain th = random_cochain(rng, ModelId::AssocMorphism, a.spaces, 2);

    SUBCASE("no chosen vertices reproduces the beta evaluation")
    {
        for (const auto& [c, t] : d.terms())
            CHECK(substitute_and_evaluate(t, {}, {}, a) ==
                  graph_evaluate(
                      t, [&](GeneratorId g) { return a.beta(g); }, a.spaces));
    }
    SUBCASE("unsupported vertices give zero")
    {
        for (const auto& [c, t] : d.terms())
            for (int v = 0; v < t.vertex_count(); ++v)
                if (!th.supports(t.nodes[v].gen))
                    CHECK(substitute_and_evaluate(t, {v}, {&th}, a).is_zero());
    }
    SUBCASE("distinctness is enforced")
    {
        const auto& t = d.terms().front().second;
        CHECK_THROWS(substitute_and_evaluate(t, {0, 0}, {&th, &th}, a));
    }
}

TEST_CASE("multilinearity and graded antisymmetry of l_2, l_3")
{
    Rng rng(41);
    for (ModelId model : {ModelId::AssocMorphism, ModelId::LieMorphism, ModelId::Iso}) {
        auto insts = bundled_instances(model);
        for (int trial = 0; trial < 6; ++trial) {
            const AlgebraInstance& a = insts[trial % insts.size()];
            int maxdeg = model == ModelId::Iso ? 3 : 2;
            int p = 1 + rng.uniform(0, maxdeg - 1), q = 1 + rng.uniform(0, maxdeg - 1);
            Cochain x = random_cochain(rng, model, a.spaces, p);
            Cochain y = random_cochain(rng, model, a.spaces, q);
            Cochain z = random_cochain(rng, model, a.spaces, p);

            // linearity in the first slot
            Cochain xz = x;
            xz += z;
            Cochain lhs = l_k({xz, y}, a);
            Cochain rhs = l_k({x, y}, a);
            rhs += l_k({z, y}, a);
            CHECK(lhs == rhs);

            // scaling
            CHECK(l_k({Rational(3, 2) * x, y}, a) == Rational(3, 2) * l_k({x, y}, a));

            // graded antisymmetry under the swap
            Rational chi = koszul_chi({1, 0}, {p, q});
            CHECK(l_k({y, x}, a) == chi * l_k({x, y}, a));

            // adjacent transposition inside l_3
            Cochain w = random_cochain(rng, model, a.spaces, q);
            Rational chi3 = koszul_chi({0, 2, 1}, {p, q, q});
            CHECK(l_k({x, w, y}, a) == chi3 * l_k({x, y, w}, a));
        }
    }
}

TEST_CASE("l_k with a zero input vanishes")
{
    AlgebraInstance a = assoc_pair2();
    Rng rng(43);
    Cochain x = random_cochain(rng, ModelId::AssocMorphism, a.spaces, 1);
    Cochain zero = zero_cochain(ModelId::AssocMorphism, 1);
    CHECK(l_k({x, zero}, a).is_zero());
    CHECK(l_k({zero, x, x}, a).is_zero());
}

TEST_CASE("l_k restricted to explicit targets")
{
    AlgebraInstance a = assoc_pair2();
    Rng rng(47);
    Cochain x = random_cochain(rng, ModelId::AssocMorphism, a.spaces, 1);
    Cochain y = random_cochain(rng, ModelId::AssocMorphism, a.spaces, 1);
    Cochain full = l_k({x, y}, a);
    std::vector<GeneratorId> targets = {{GenFamily::F, 2}};
    Cochain part = l_k(std::vector<const Cochain*>{&x, &y}, a, &targets);
    CHECK(part.value({GenFamily::F, 2}, a.spaces) ==
          full.value({GenFamily::F, 2}, a.spaces));
    CHECK(part.values.count({GenFamily::Mu, 3}) == 0);
}

TEST_CASE("delta squared vanishes on random cochains")
{
    for (ModelId model : {ModelId::AssocMorphism, ModelId::LieMorphism, ModelId::Iso}) {
        SuiteResult r = suite_delta2(model, 2024, 20, 3);
        for (const auto& line : r.lines)
            INFO(line);
        CHECK(r.ok);
    }
}

TEST_CASE("generalized Jacobi relations n = 1, 2, 3")
{
    for (ModelId model : {ModelId::AssocMorphism, ModelId::LieMorphism, ModelId::Iso}) {
        SuiteResult r = suite_linfty(model, 77, 6);
        for (const auto& line : r.lines)
            INFO(line);
        CHECK(r.ok);
    }
}

TEST_CASE("iso closed forms from the engine")
{
    AlgebraInstance a = iso_one_dim();
    // x odd of degree 1 with components (a, b); y even of degree 2 with (c, d)
    MultiMap A = MultiMap::zero(a.spaces, Color::W, {Color::B});
    A.at({0, {0}}) = Rational(2);
    MultiMap B = MultiMap::zero(a.spaces, Color::B, {Color::W});
    B.at({0, {0}}) = Rational(3);
    Cochain x = iso_pair(a, 1, A, B);
    Cochain dx = delta(x, a);
    // l_1(a + b) = (G a + b F, a G + F b) = (5, 5) here
    CHECK(dx.value({GenFamily::F, 1}, a.spaces).at({0, {0}}) == Rational(5));
    CHECK(dx.value({GenFamily::G, 1}, a.spaces).at({0, {0}}) == Rational(5));

    MultiMap C = MultiMap::zero(a.spaces, Color::B, {Color::B});
    C.at({0, {0}}) = Rational(7);
    MultiMap D = MultiMap::zero(a.spaces, Color::W, {Color::W});
    D.at({0, {0}}) = Rational(11);
    Cochain y = iso_pair(a, 2, C, D);
    Cochain dy = delta(y, a);
    // l_1(c + d) = (F c - d F, G d - c G) = (-4, 4)
    CHECK(dy.value({GenFamily::F, 2}, a.spaces).at({0, {0}}) == Rational(-4));
    CHECK(dy.value({GenFamily::G, 2}, a.spaces).at({0, {0}}) == Rational(4));

    // odd-odd bracket: l_2(x, x) = (2 b a, 2 a b) = (12, 12)
    Cochain l2xx = l_k({x, x}, a);
    CHECK(l2xx.value({GenFamily::F, 1}, a.spaces).at({0, {0}}) == Rational(12));
    CHECK(l2xx.value({GenFamily::G, 1}, a.spaces).at({0, {0}}) == Rational(12));
}

TEST_CASE("qme over the trivial iso diagram characterizes inverse pairs")
{
    AlgebraInstance a = iso_trivial2();
    Rng rng(99);
    auto [F, G] = random_inverse_pair2(rng, a.spaces);
    Cochain good = iso_pair(a, 1, F, G);
    CHECK(qme_residual(good, a, 2).is_zero());
    CHECK(qme_residual(good, a, 5).is_zero());

    Cochain zero_k = zero_cochain(ModelId::Iso, 1);
    Cochain res = qme_residual(zero_k, a, 2);
    // only the curvature survives: -l_0
    CHECK(res.value({GenFamily::F, 1}, a.spaces) ==
          Rational(-1) * MultiMap::identity(a.spaces, Color::B));

    MultiMap Fp = F;
    Fp.at({0, {0}}) += Rational(1);
    Cochain bad = iso_pair(a, 1, Fp, G);
    CHECK_FALSE(qme_residual(bad, a, 2).is_zero());

    CHECK_THROWS(qme_residual(good, a, 1));
    Cochain deg2 = random_cochain(rng, ModelId::Iso, a.spaces, 2);
    CHECK_THROWS(qme_residual(deg2, a, 3));
}

TEST_CASE("qme over assoc encodes the algebra axioms")
{
    SuiteResult r = suite_qme(ModelId::AssocMorphism, 7, 8);
    for (const auto& line : r.lines)
        INFO(line);
    CHECK(r.ok);
}

TEST_CASE("vanishing corollaries")
{
    for (ModelId model : {ModelId::AssocMorphism, ModelId::LieMorphism, ModelId::Iso}) {
        SuiteResult r = suite_vanishing(model, 15, 6);
        for (const auto& line : r.lines)
            INFO(line);
        CHECK(r.ok);
    }
}

TEST_CASE("iso identities")
{
    SuiteResult r = suite_iso_identities(21, 9);
    for (const auto& line : r.lines)
        INFO(line);
    CHECK(r.ok);
}
