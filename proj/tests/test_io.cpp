#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "defc/classical.hpp"
#include "defc/json_io.hpp"
#include "defc/sampling.hpp"

using namespace defc;

TEST_CASE("algebra instances round-trip through JSON")
{
    for (ModelId model : {ModelId::AssocMorphism, ModelId::LieMorphism, ModelId::Iso})
        for (const AlgebraInstance& a : bundled_instances(model)) {
            json j = algebra_to_json(a);
            AlgebraInstance b = algebra_from_json(j);
            CHECK(b.model == a.model);
            CHECK(b.spaces.B.dim == a.spaces.B.dim);
            for (const auto& [name, m] : a.structure)
                CHECK(b.map(name) == m);
            // identical inputs give byte-identical output
            CHECK(algebra_to_json(b).dump() == j.dump());
        }
}

TEST_CASE("cochains round-trip through JSON")
{
    Rng rng(101);
    for (ModelId model : {ModelId::AssocMorphism, ModelId::LieMorphism, ModelId::Iso}) {
        AlgebraInstance a = bundled_instances(model).front();
        for (int deg = 1; deg <= 3; ++deg) {
            Cochain c = random_cochain(rng, model, a.spaces, deg);
            json j = cochain_to_json(c);
            Cochain back = cochain_from_json(j, a.spaces);
            CHECK(back == c);
            CHECK(cochain_to_json(back).dump() == j.dump());
        }
    }
}

TEST_CASE("malformed inputs are rejected")
{
    AlgebraInstance a = assoc_pair2();
    SUBCASE("zero denominator")
    {
        Rng rng(3);
        json j = cochain_to_json(random_cochain(rng, ModelId::AssocMorphism, a.spaces, 1));
        j["values"]["mu_2"][0][0][0] = "1/0";
        CHECK_THROWS(cochain_from_json(j, a.spaces));
    }
    SUBCASE("wrong tensor extent")
    {
        json j = algebra_to_json(a);
        j["structure"]["g"] = json::array({json::array({"1"})});
        CHECK_THROWS(algebra_from_json(j));
    }
    SUBCASE("generator of the wrong degree")
    {
        json j;
        j["model"] = "assoc_morphism";
        j["degree"] = 2;
        j["values"]["mu_2"] = multimap_to_json(a.map("mu_U"));
        CHECK_THROWS(cochain_from_json(j, a.spaces));
    }
    SUBCASE("bad dimension")
    {
        json j = algebra_to_json(a);
        j["spaces"]["U"]["dim"] = 0;
        CHECK_THROWS(algebra_from_json(j));
    }
}

TEST_CASE("gs cochains reuse the cochain format with component keys")
{
    AlgebraInstance a = assoc_pair2();
    Rng rng(7);
    Cochain th = random_cochain(rng, ModelId::AssocMorphism, a.spaces, 2);
    GSCochain x = prop_to_gs(th, a.spaces);
    json j = gs_cochain_to_json(x);
    CHECK(j["values"].contains("x_U"));
    GSCochain back = gs_cochain_from_json(j, a.spaces);
    CHECK(back == x);
    CHECK(gs_cochain_to_json(back).dump() == j.dump());
}

TEST_CASE("rationals appear as exact p/q strings")
{
    Spaces sp(1, 1);
    MultiMap m = MultiMap::zero(sp, Color::B, {Color::B});
    m.at({0, {0}}) = Rational(-3, 2);
    json j = multimap_to_json(m);
    CHECK(j[0][0].get<std::string>() == "-3/2");
    MultiMap back = multimap_from_json(j, sp, Color::B, {Color::B});
    CHECK(back == m);
}
