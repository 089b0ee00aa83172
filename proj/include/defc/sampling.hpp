#pragma once

#include <cstdint>
#include <vector>

#include "defc/algebra.hpp"
#include "defc/model.hpp"

namespace defc {

// Deterministic splitmix64 generator; a run is fully reproducible from the
// 64-bit seed.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next()
    {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int uniform(int lo, int hi) // inclusive
    {
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
    // numerators in [-3,3], denominators in {1,2,3}: keeps tensor entries and
    // runtimes small
    Rational small_rational() { return Rational(uniform(-3, 3), uniform(1, 3)); }
};

inline MultiMap random_multimap(Rng& rng, const Spaces& sp, Color out,
                                const std::vector<Color>& in)
{
    MultiMap m = MultiMap::zero(sp, out, in);
    for (auto& c : m.coeffs())
        c = rng.small_rational();
    return m;
}

// random homogeneous cochain; skew models get alternating values
inline Cochain random_cochain(Rng& rng, ModelId model, const Spaces& sp, int degree)
{
    const ModelTable& tbl = model_table(model);
    Cochain c = zero_cochain(model, degree);
    for (GeneratorId g : tbl.generators_of_degree(degree - 1)) {
        GenInfo gi = tbl.info(g);
        MultiMap m = random_multimap(rng, sp, gi.out, gi.ins);
        if (gi.skew)
            m = antisymmetrize(m);
        if (!m.is_zero())
            c.set(g, m);
    }
    return c;
}

// ----- bundled instances ------------------------------------------------------

inline MultiMap matrix(const Spaces& sp, Color out, Color in,
                       const std::vector<std::vector<Rational>>& rows)
{
    MultiMap m = MultiMap::zero(sp, out, {in});
    for (int o = 0; o < m.out_dim(); ++o)
        for (int i = 0; i < m.in_dims()[0]; ++i)
            m.at({o, {i}}) = rows[o][i];
    return m;
}

inline MultiMap zero_mult(const Spaces& sp, Color c)
{
    return MultiMap::zero(sp, c, {c, c});
}

// one-dimensional algebra with e.e = e and the identity morphism
inline AlgebraInstance assoc_one_dim()
{
    Spaces sp(1, 1);
    MultiMap mu = MultiMap::zero(sp, Color::B, {Color::B, Color::B});
    mu.at({0, {0, 0}}) = Rational(1);
    MultiMap nu = MultiMap::zero(sp, Color::W, {Color::W, Color::W});
    nu.at({0, {0, 0}}) = Rational(1);
    MultiMap g = matrix(sp, Color::W, Color::B, {{Rational(1)}});
    return make_assoc_instance(ModelId::AssocMorphism, sp, mu, nu, g);
}

// dims 2, both multiplications zero; any linear g is a morphism
inline AlgebraInstance assoc_zero2()
{
    Spaces sp(2, 2);
    MultiMap g = MultiMap::zero(sp, Color::W, {Color::B});
    return make_assoc_instance(ModelId::AssocMorphism, sp, zero_mult(sp, Color::B),
                               zero_mult(sp, Color::W), g);
}

// k x k with componentwise product, identity morphism
inline AlgebraInstance assoc_pair2()
{
    Spaces sp(2, 2);
    MultiMap mu = zero_mult(sp, Color::B);
    MultiMap nu = zero_mult(sp, Color::W);
    for (int i = 0; i < 2; ++i) {
        mu.at({i, {i, i}}) = Rational(1);
        nu.at({i, {i, i}}) = Rational(1);
    }
    MultiMap g = matrix(sp, Color::W, Color::B, {{Rational(1), Rational(0)},
                                                 {Rational(0), Rational(1)}});
    return make_assoc_instance(ModelId::AssocMorphism, sp, mu, nu, g);
}

// dual numbers k[x]/(x^2) mapping onto k by the augmentation
inline AlgebraInstance assoc_dual_to_base()
{
    Spaces sp(2, 1);
    MultiMap mu = zero_mult(sp, Color::B);
    // basis (1, x): 1.1 = 1, 1.x = x.1 = x, x.x = 0
    mu.at({0, {0, 0}}) = Rational(1);
    mu.at({1, {0, 1}}) = Rational(1);
    mu.at({1, {1, 0}}) = Rational(1);
    MultiMap nu = zero_mult(sp, Color::W);
    nu.at({0, {0, 0}}) = Rational(1);
    MultiMap g = matrix(sp, Color::W, Color::B, {{Rational(1), Rational(0)}});
    return make_assoc_instance(ModelId::AssocMorphism, sp, mu, nu, g);
}

inline AlgebraInstance lie_abelian2()
{
    Spaces sp(2, 2);
    MultiMap g = matrix(sp, Color::W, Color::B, {{Rational(1), Rational(1)},
                                                 {Rational(0), Rational(1)}});
    return make_assoc_instance(ModelId::LieMorphism, sp, zero_mult(sp, Color::B),
                               zero_mult(sp, Color::W), g);
}

// [e0,e1] = e0 on both sides, identity morphism
inline AlgebraInstance lie_affine2()
{
    Spaces sp(2, 2);
    MultiMap mu = zero_mult(sp, Color::B);
    mu.at({0, {0, 1}}) = Rational(1);
    mu.at({0, {1, 0}}) = Rational(-1);
    MultiMap nu = zero_mult(sp, Color::W);
    nu.at({0, {0, 1}}) = Rational(1);
    nu.at({0, {1, 0}}) = Rational(-1);
    MultiMap g = matrix(sp, Color::W, Color::B, {{Rational(1), Rational(0)},
                                                 {Rational(0), Rational(1)}});
    return make_assoc_instance(ModelId::LieMorphism, sp, mu, nu, g);
}

// the affine algebra mapping onto the abelian line: g kills the derived algebra
inline AlgebraInstance lie_affine_to_abelian()
{
    Spaces sp(2, 1);
    MultiMap mu = zero_mult(sp, Color::B);
    mu.at({0, {0, 1}}) = Rational(1);
    mu.at({0, {1, 0}}) = Rational(-1);
    MultiMap nu = zero_mult(sp, Color::W);
    MultiMap g = matrix(sp, Color::W, Color::B, {{Rational(0), Rational(1)}});
    return make_assoc_instance(ModelId::LieMorphism, sp, mu, nu, g);
}

// Heisenberg algebra [e0,e1] = e2, identity morphism (three-dimensional)
inline AlgebraInstance lie_heisenberg3()
{
    Spaces sp(3, 3);
    MultiMap mu = zero_mult(sp, Color::B);
    mu.at({2, {0, 1}}) = Rational(1);
    mu.at({2, {1, 0}}) = Rational(-1);
    MultiMap nu = zero_mult(sp, Color::W);
    nu.at({2, {0, 1}}) = Rational(1);
    nu.at({2, {1, 0}}) = Rational(-1);
    MultiMap g = matrix(sp, Color::W, Color::B,
                        {{Rational(1), Rational(0), Rational(0)},
                         {Rational(0), Rational(1), Rational(0)},
                         {Rational(0), Rational(0), Rational(1)}});
    return make_assoc_instance(ModelId::LieMorphism, sp, mu, nu, g);
}

inline AlgebraInstance iso_one_dim()
{
    Spaces sp(1, 1);
    MultiMap F = matrix(sp, Color::W, Color::B, {{Rational(1)}});
    MultiMap G = matrix(sp, Color::B, Color::W, {{Rational(1)}});
    return make_iso_instance(sp, F, G);
}

// the trivial diagram F = G = 0 on two-dimensional spaces
inline AlgebraInstance iso_trivial2()
{
    Spaces sp(2, 2);
    return make_iso_instance(sp, MultiMap::zero(sp, Color::W, {Color::B}),
                             MultiMap::zero(sp, Color::B, {Color::W}));
}

// seeded invertible 2x2 map with exact inverse
inline std::pair<MultiMap, MultiMap> random_inverse_pair2(Rng& rng, const Spaces& sp)
{
    while (true) {
        Rational a(rng.uniform(-2, 2)), b(rng.uniform(-2, 2));
        Rational c(rng.uniform(-2, 2)), d(rng.uniform(-2, 2));
        Rational det = a * d - b * c;
        if (det.is_zero())
            continue;
        MultiMap F = matrix(sp, Color::W, Color::B, {{a, b}, {c, d}});
        MultiMap G = matrix(sp, Color::B, Color::W,
                            {{d / det, Rational(-1) * b / det},
                             {Rational(-1) * c / det, a / det}});
        return {F, G};
    }
}

inline AlgebraInstance iso_random2(Rng& rng)
{
    Spaces sp(2, 2);
    auto [F, G] = random_inverse_pair2(rng, sp);
    return make_iso_instance(sp, F, G);
}

// strict instances used by the randomized verification suites
inline std::vector<AlgebraInstance> bundled_instances(ModelId model)
{
    switch (model) {
    case ModelId::AssocMorphism:
        return {assoc_zero2(), assoc_pair2(), assoc_dual_to_base(), assoc_one_dim()};
    case ModelId::LieMorphism:
        return {lie_abelian2(), lie_affine2(), lie_affine_to_abelian()};
    default: return {iso_one_dim(), iso_trivial2()};
    }
}

} // namespace defc
