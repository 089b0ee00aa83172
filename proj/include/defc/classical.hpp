#pragma once

#include <stdexcept>

#include "defc/algebra.hpp"
#include "defc/multimap.hpp"
#include "defc/perm.hpp"

namespace defc {

// Bimodule / module data for the coboundary operators: the algebra
// multiplication and the left/right actions on the coefficient space.
struct ModuleData {
    MultiMap mult;  // A (x) A -> A
    MultiMap left;  // A (x) M -> M
    MultiMap right; // M (x) A -> M  (associative case only)
};

// coefficient patterns of the three slots of a morphism cochain
inline ModuleData module_uu(const MultiMap& mu_U)
{
    return {mu_U, mu_U, mu_U};
}
inline ModuleData module_vv(const MultiMap& mu_V)
{
    return {mu_V, mu_V, mu_V};
}
inline ModuleData module_uv(const MultiMap& mu_U, const MultiMap& mu_V, const MultiMap& g)
{
    // U acts on V through g on both sides
    return {mu_U, compose_at(mu_V, 1, g), compose_at(mu_V, 2, g)};
}

// Standard Hochschild coboundary
//   (b d)(a_1,...,a_{n+1}) = a_1 d(a_2,...) + sum_s (-1)^s d(..., a_s a_{s+1}, ...)
//                            + (-1)^{n+1} d(a_1,...,a_n) a_{n+1}
inline MultiMap hochschild_b(const MultiMap& d, const ModuleData& md)
{
    int n = d.arity();
    MultiMap out = compose_at(md.left, 2, d);
    for (int s = 1; s <= n; ++s)
        out += sign_pow(s) * compose_at(d, s, md.mult);
    out += sign_pow(n + 1) * compose_at(md.right, 1, d);
    return out;
}

// Chevalley-Eilenberg coboundary in the convention fixed by the deformation
// complex of Lie morphisms:
//   (b d)(x_1,...,x_{n+1}) = sum_{s<t} (-1)^{s+t-1} d([x_s,x_t], x_1,...)
//                            + sum_s (-1)^s x_s . d(x_1,...,\hat x_s,...)
// (the negative of the textbook convention; it squares to zero all the same).
inline MultiMap chevalley_eilenberg_b(const MultiMap& d, const ModuleData& md)
{
    if (!d.is_alternating())
        throw std::invalid_argument("chevalley_eilenberg_b: cochain not alternating");
    int n = d.arity();
    MultiMap act = compose_at(md.left, 2, d); // (x, ...) -> x . d(...)
    MultiMap out = MultiMap::zero(Spaces(), Color::B, {});
    bool first = true;
    if (n >= 1) {
        MultiMap ins = compose_at(d, 1, md.mult); // d([.,.], ...)
        for (const auto& su : enumerate_unshuffles(2, n - 1)) {
            MultiMap t = Rational(su.sign) * apply_permutation(ins, su.perm);
            if (first) {
                out = t;
                first = false;
            }
            else
                out += t;
        }
    }
    for (const auto& su : enumerate_unshuffles(1, n)) {
        MultiMap t = Rational(-su.sign) * apply_permutation(act, su.perm);
        if (first) {
            out = t;
            first = false;
        }
        else
            out += t;
    }
    return out;
}

// An element of the Gerstenhaber-Schack complex of a morphism g: U -> V:
//   C^n = Hom(U^{(x)n}, U) + Hom(V^{(x)n}, V) + Hom(U^{(x)n-1}, V).
struct GSCochain {
    int n = 1;
    MultiMap x_U, x_V, x_g;

    friend bool operator==(const GSCochain& a, const GSCochain& b)
    {
        return a.n == b.n && a.x_U == b.x_U && a.x_V == b.x_V && a.x_g == b.x_g;
    }
    bool is_zero() const { return x_U.is_zero() && x_V.is_zero() && x_g.is_zero(); }
};

// the S-complex element is shaped like a GS element with alternating slots
using SCochain = GSCochain;

inline void require_alternating(const SCochain& x, const char* who)
{
    if (!x.x_U.is_alternating() || !x.x_V.is_alternating() || !x.x_g.is_alternating())
        throw std::invalid_argument(std::string(who) + ": components must be alternating");
}

// x_V g^{(x)n}: plugs g into every input of x_V
inline MultiMap precompose_all(const MultiMap& x_V, const MultiMap& g)
{
    MultiMap r = x_V;
    for (int s = 1; s <= x_V.arity(); ++s)
        r = compose_at(r, s, g);
    return r;
}

// d_GS(x_U, x_V, x_g) = (b x_U, b x_V, g x_U - x_V g^{(x)n} - b x_g)
inline GSCochain gs_d(const GSCochain& x, const MultiMap& mu_U, const MultiMap& mu_V,
                      const MultiMap& g)
{
    GSCochain out;
    out.n = x.n + 1;
    out.x_U = hochschild_b(x.x_U, module_uu(mu_U));
    out.x_V = hochschild_b(x.x_V, module_vv(mu_V));
    out.x_g = compose_at(g, 1, x.x_U) - precompose_all(x.x_V, g) -
              hochschild_b(x.x_g, module_uv(mu_U, mu_V, g));
    return out;
}

// Delta(x_U, x_V, x_g) = (b x_U, b x_V, (-1)^{n-1} g x_U - (-1)^{n-1} x_V g^{(x)n} + b x_g)
inline SCochain s_delta(const SCochain& x, const MultiMap& mu_U, const MultiMap& mu_V,
                        const MultiMap& g)
{
    require_alternating(x, "s_delta");
    SCochain out;
    out.n = x.n + 1;
    out.x_U = chevalley_eilenberg_b(x.x_U, module_uu(mu_U));
    out.x_V = chevalley_eilenberg_b(x.x_V, module_vv(mu_V));
    Rational s = sign_pow(x.n - 1);
    out.x_g = s * compose_at(g, 1, x.x_U) - s * precompose_all(x.x_V, g) +
              chevalley_eilenberg_b(x.x_g, module_uv(mu_U, mu_V, g));
    return out;
}

// ----- transport between the deformation complexes and the classical ones ---

inline GSCochain cochain_components(const Cochain& th, const Spaces& sp)
{
    if (th.model == ModelId::Iso)
        throw std::invalid_argument("cochain_components: morphism models only");
    int n = th.degree + 1;
    GSCochain out;
    out.n = n;
    out.x_U = th.value({GenFamily::Mu, n}, sp);
    out.x_V = th.value({GenFamily::Nu, n}, sp);
    out.x_g = th.value({GenFamily::F, n - 1}, sp);
    return out;
}

inline Cochain components_to_cochain(ModelId model, const GSCochain& x)
{
    Cochain th = zero_cochain(model, x.n - 1);
    if (!x.x_U.is_zero())
        th.set({GenFamily::Mu, x.n}, x.x_U);
    if (!x.x_V.is_zero())
        th.set({GenFamily::Nu, x.n}, x.x_V);
    if (!x.x_g.is_zero())
        th.set({GenFamily::F, x.n - 1}, x.x_g);
    return th;
}

// the sign-twisted isomorphism onto the Gerstenhaber-Schack complex:
//   theta -> ((-1)^{n(n+1)/2} theta_U, (-1)^{n(n+1)/2} theta_V,
//             (-1)^{(n-1)n/2} theta_g)
inline GSCochain prop_to_gs(const Cochain& th, const Spaces& sp)
{
    if (th.model != ModelId::AssocMorphism)
        throw std::invalid_argument("prop_to_gs: assoc_morphism cochains only");
    GSCochain x = cochain_components(th, sp);
    long long n = x.n;
    Rational s1 = sign_pow(n * (n + 1) / 2);
    Rational s2 = sign_pow((n - 1) * n / 2);
    x.x_U = s1 * x.x_U;
    x.x_V = s1 * x.x_V;
    x.x_g = s2 * x.x_g;
    return x;
}

inline Cochain gs_to_prop(const GSCochain& x)
{
    long long n = x.n;
    GSCochain y = x;
    y.x_U = sign_pow(n * (n + 1) / 2) * x.x_U;
    y.x_V = sign_pow(n * (n + 1) / 2) * x.x_V;
    y.x_g = sign_pow((n - 1) * n / 2) * x.x_g;
    return components_to_cochain(ModelId::AssocMorphism, y);
}

// the isomorphism onto the S-complex: identity on the U,V slots and
// (-1)^{n-1} on the mixed slot
inline SCochain prop_to_s(const Cochain& th, const Spaces& sp)
{
    if (th.model != ModelId::LieMorphism)
        throw std::invalid_argument("prop_to_s: lie_morphism cochains only");
    SCochain x = cochain_components(th, sp);
    x.x_g = sign_pow(x.n - 1) * x.x_g;
    return x;
}

inline Cochain s_to_prop(const SCochain& x)
{
    SCochain y = x;
    y.x_g = sign_pow(x.n - 1) * x.x_g;
    return components_to_cochain(ModelId::LieMorphism, y);
}

} // namespace defc
