#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "defc/multimap.hpp"
#include "defc/perm.hpp"
#include "defc/rational.hpp"
#include "defc/sampling.hpp"

using namespace defc;

TEST_CASE("bigint arithmetic")
{
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("-98765432109876543210");
    CHECK((a * b).str() == "-12193263113702179522496570642237463801111263526900");
    CHECK(((a + b) - b) == a);
    CHECK((a - a).str() == "0");
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK((q * b + r) == a);
    CHECK(BigInt::gcd(BigInt(48), BigInt(-18)) == BigInt(6));
}

TEST_CASE("rationals are normalized and exact")
{
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 3) * Rational(3, 7)) == Rational(1, 7));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("koszul chi")
{
    // identity: +1 for any degrees
    CHECK(koszul_chi(perm_identity(3), {0, 1, 2}) == Rational(1));
    // swap of two odd elements: sgn = -1, eps = -1
    CHECK(koszul_chi({1, 0}, {1, 1}) == Rational(1));
    // swap of an even and an odd element: sgn = -1, eps = +1
    CHECK(koszul_chi({1, 0}, {0, 1}) == Rational(-1));
    // multiplicativity chi(st) = chi(s)chi(t with permuted degrees)
    Rng rng(7);
    std::vector<int> degrees = {1, 2, 0, 1};
    Perm s = {2, 0, 3, 1}, t = {1, 3, 0, 2};
    Perm st = perm_compose(s, t);
    std::vector<int> deg_s(4);
    for (int i = 0; i < 4; ++i)
        deg_s[i] = degrees[s[i]];
    CHECK(koszul_chi(st, degrees) == koszul_chi(s, degrees) * koszul_chi(t, deg_s));
}

TEST_CASE("unshuffle enumeration")
{
    auto u11 = enumerate_unshuffles(1, 1);
    REQUIRE(u11.size() == 2);
    CHECK(u11[0].sign == 1);
    CHECK(u11[1].sign == -1);
    CHECK(enumerate_unshuffles(2, 1).size() == 3);
    CHECK(enumerate_unshuffles(0, 4).size() == 1);
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4 - p; ++q)
            CHECK(static_cast<long long>(enumerate_unshuffles(p, q).size()) ==
                  binomial(p + q, p));
    // every unshuffle is increasing on both blocks
    for (const auto& su : enumerate_unshuffles(3, 2)) {
        for (int i = 0; i + 1 < 3; ++i)
            CHECK(su.perm[i] < su.perm[i + 1]);
        for (int i = 3; i + 1 < 5; ++i)
            CHECK(su.perm[i] < su.perm[i + 1]);
        CHECK(su.sign == perm_sign(su.perm));
    }
}

TEST_CASE("block unshuffles against brute force")
{
    CHECK(enumerate_block_unshuffles({4}).size() == 1);
    CHECK(enumerate_block_unshuffles({1, 1}).size() == 1);  // the swap is excluded
    CHECK(enumerate_block_unshuffles({1, 2}).size() == 3);
    CHECK_THROWS(enumerate_block_unshuffles({2, 1}));

    // brute-force filter of the full symmetric group
    auto brute = [](const std::vector<int>& r) {
        int n = 0;
        for (int x : r)
            n += x;
        Perm p = perm_identity(n);
        int count = 0;
        do {
            bool ok = true;
            int pos = 0;
            std::vector<int> starts;
            for (int x : r) {
                starts.push_back(pos);
                for (int i = 0; i + 1 < x; ++i)
                    ok = ok && p[pos + i] < p[pos + i + 1];
                pos += x;
            }
            for (size_t b = 0; b + 1 < r.size(); ++b)
                if (r[b] == r[b + 1])
                    ok = ok && p[starts[b]] < p[starts[b + 1]];
            count += ok;
        } while (std::next_permutation(p.begin(), p.end()));
        return count;
    };
    for (auto r : std::vector<std::vector<int>>{{1, 1, 1}, {1, 1, 2}, {2, 2}, {1, 2, 3},
                                                {2, 2, 2}, {3, 3}, {1, 1, 1, 1}})
        CHECK(static_cast<int>(enumerate_block_unshuffles(r).size()) == brute(r));
}

static MultiMap one_dim_product()
{
    Spaces sp(1, 1);
    MultiMap mu = MultiMap::zero(sp, Color::B, {Color::B, Color::B});
    mu.at({0, {0, 0}}) = Rational(1);
    return mu;
}

TEST_CASE("compose_at")
{
    Spaces sp(1, 1);
    MultiMap mu = one_dim_product();
    MultiMap id = MultiMap::identity(sp, Color::B);

    SUBCASE("identity absorbs")
    {
        CHECK(compose_at(id, 1, mu) == mu);
        CHECK(compose_at(mu, 1, id) == mu);
    }
    SUBCASE("(ee)e = e in the one-dimensional algebra")
    {
        MultiMap m3 = compose_at(mu, 1, mu);
        CHECK(m3.arity() == 3);
        CHECK(m3.at({0, {0, 0, 0}}) == Rational(1));
    }
    SUBCASE("coefficients match the index-level contraction")
    {
        Spaces sp2(2, 2);
        Rng rng(11);
        MultiMap f = random_multimap(rng, sp2, Color::B, {Color::B, Color::B});
        MultiMap g = random_multimap(rng, sp2, Color::B, {Color::B, Color::B});
        MultiMap h = compose_at(f, 1, g);
        // independent oracle: h^a_{b1 b2 c} = sum_k f^a_{k c} g^k_{b1 b2}
        for (int a = 0; a < 2; ++a)
            for (int b1 = 0; b1 < 2; ++b1)
                for (int b2 = 0; b2 < 2; ++b2)
                    for (int c = 0; c < 2; ++c) {
                        Rational want(0);
                        for (int k = 0; k < 2; ++k)
                            want += f.at({a, {k, c}}) * g.at({k, {b1, b2}});
                        CHECK(h.at({a, {b1, b2, c}}) == want);
                    }
    }
    SUBCASE("nested associativity of partial composition")
    {
        Spaces sp2(2, 2);
        Rng rng(13);
        for (int trial = 0; trial < 10; ++trial) {
            MultiMap f = random_multimap(rng, sp2, Color::B, {Color::B, Color::B});
            MultiMap g = random_multimap(rng, sp2, Color::B, {Color::B, Color::B, Color::B});
            MultiMap h = random_multimap(rng, sp2, Color::B, {Color::B, Color::B});
            for (int s = 1; s <= 2; ++s)
                for (int t = 1; t <= 3; ++t)
                    CHECK(compose_at(compose_at(f, s, g), s + t - 1, h) ==
                          compose_at(f, s, compose_at(g, t, h)));
        }
    }
    SUBCASE("errors")
    {
        CHECK_THROWS(compose_at(mu, 3, mu));
        MultiMap nu = MultiMap::zero(sp, Color::W, {Color::W, Color::W});
        CHECK_THROWS(compose_at(mu, 1, nu));
    }
}

TEST_CASE("permutation action")
{
    Spaces sp(1, 1);
    SUBCASE("projection swap on a one-dimensional space")
    {
        // f(x,y) = x
        Spaces sp1(1, 1);
        MultiMap f = MultiMap::zero(sp1, Color::B, {Color::B, Color::B});
        f.at({0, {0, 0}}) = Rational(1);
        (void)f;
    }
    SUBCASE("swap turns first projection into second")
    {
        Spaces sp2(2, 2);
        MultiMap f = MultiMap::zero(sp2, Color::B, {Color::B, Color::B});
        // f(x,y) = x
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                f.at({i, {i, j}}) += Rational(1);
        MultiMap fs = apply_permutation(f, {1, 0});
        // (f.sigma)(x,y) = f(y,x) = y
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                CHECK(fs.at({i, {j, i}}) == Rational(1));
    }
    SUBCASE("color-mixing permutations are rejected")
    {
        Spaces sp2(2, 2);
        MultiMap f = MultiMap::zero(sp2, Color::W, {Color::B, Color::W});
        CHECK_THROWS(apply_permutation(f, {1, 0}));
    }
    SUBCASE("right action law")
    {
        Spaces sp2(2, 2);
        Rng rng(17);
        for (int trial = 0; trial < 10; ++trial) {
            MultiMap f =
                random_multimap(rng, sp2, Color::B, {Color::B, Color::B, Color::B});
            Perm s = perm_identity(3), t = perm_identity(3);
            for (int swaps = 0; swaps < 3; ++swaps) {
                std::swap(s[rng.uniform(0, 2)], s[rng.uniform(0, 2)]);
                std::swap(t[rng.uniform(0, 2)], t[rng.uniform(0, 2)]);
            }
            // (f.s).t = f.(st) where st means "s followed by t"
            CHECK(apply_permutation(apply_permutation(f, s), t) ==
                  apply_permutation(f, perm_compose(t, s)));
        }
    }
}

TEST_CASE("antisymmetrize")
{
    Spaces sp(2, 2);
    Rng rng(19);
    MultiMap f = random_multimap(rng, sp, Color::B, {Color::B, Color::B});
    MultiMap alt = antisymmetrize(f);
    SUBCASE("idempotent and alternating")
    {
        CHECK(antisymmetrize(alt) == alt);
        CHECK(alt.is_alternating());
    }
    SUBCASE("explicit alternating part of a projection")
    {
        MultiMap p = MultiMap::zero(sp, Color::B, {Color::B, Color::B});
        // p(x,y) = x
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                p.at({i, {i, j}}) += Rational(1);
        MultiMap ap = antisymmetrize(p);
        // (x - y)/2 entrywise
        for (int o = 0; o < 2; ++o)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    Rational want = (Rational(o == i ? 1 : 0) - Rational(o == j ? 1 : 0)) *
                                    Rational(1, 2);
                    CHECK(ap.at({o, {i, j}}) == want);
                }
    }
    SUBCASE("already alternating maps are fixed")
    {
        CHECK(antisymmetrize(alt) == alt);
    }
    SUBCASE("f.sigma = sgn(sigma) f for alternating f, arity up to 4")
    {
        for (int ar = 2; ar <= 4; ++ar) {
            MultiMap h =
                antisymmetrize(random_multimap(rng, sp, Color::B,
                                               std::vector<Color>(ar, Color::B)));
            Perm p = perm_identity(ar);
            do {
                CHECK(apply_permutation(h, p) == Rational(perm_sign(p)) * h);
            } while (std::next_permutation(p.begin(), p.end()));
        }
    }
}
