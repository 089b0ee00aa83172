#pragma once

#include <stdexcept>
#include <vector>

#include "defc/classical.hpp"
#include "defc/multimap.hpp"
#include "defc/perm.hpp"

// Closed-form comparators for the bracket operations, written as explicit
// sums (compositions, cup products, unshuffles and admissible tuples) with no
// graph machinery.  They serve as ground truth for the graph-substitution
// engine.

namespace defc::oracle {

// x with h plugged into input i and fill into every other input
inline MultiMap plug_one(const MultiMap& x, int i, const MultiMap& h, const MultiMap& fill)
{
    MultiMap r = x;
    for (int t = x.arity(); t >= 1; --t)
        r = compose_at(r, t, t == i ? h : fill);
    return r;
}

// x with h_j plugged into input a_j (1-based, distinct) and fill elsewhere
inline MultiMap plug_many(const MultiMap& x, const std::vector<int>& a,
                          const std::vector<const MultiMap*>& hs, const MultiMap& fill)
{
    MultiMap r = x;
    for (int t = x.arity(); t >= 1; --t) {
        const MultiMap* h = &fill;
        for (size_t q = 0; q < a.size(); ++q)
            if (a[q] == t)
                h = hs[q];
        r = compose_at(r, t, *h);
    }
    return r;
}

// Koszul sign of routing graded insertions to positions: one factor
// (-1)^{d_i d_j} per pair i<j placed in increasing position order.  The
// decorations are tensored children-first, so "at the top vertex" is the
// largest position.
inline Rational routing_sign(const std::vector<int>& pos, const std::vector<int>& dpar)
{
    long long e = 0;
    for (size_t i = 0; i < pos.size(); ++i)
        for (size_t j = i + 1; j < pos.size(); ++j)
            if (pos[i] < pos[j])
                e += static_cast<long long>(dpar[i]) * dpar[j];
    return sign_pow(e);
}

// ----- associative morphisms ------------------------------------------------

// differential, GS index n -> n+1:
//   ((-1)^{n+1} b x_U, (-1)^{n+1} b x_V, g x_U - x_V g^{(x)n} - (-1)^n b x_g)
inline GSCochain as_l1_formula(const GSCochain& x, const MultiMap& mu_U, const MultiMap& mu_V,
                               const MultiMap& g)
{
    int n = x.n;
    GSCochain out;
    out.n = n + 1;
    out.x_U = sign_pow(n + 1) * hochschild_b(x.x_U, module_uu(mu_U));
    out.x_V = sign_pow(n + 1) * hochschild_b(x.x_V, module_vv(mu_V));
    out.x_g = compose_at(g, 1, x.x_U) - precompose_all(x.x_V, g) -
              sign_pow(n) * hochschild_b(x.x_g, module_uv(mu_U, mu_V, g));
    return out;
}

// binary bracket, GS indices n, m -> n+m-1
inline GSCochain as_l2_formula(const GSCochain& th, const GSCochain& om, const MultiMap& mu_U,
                               const MultiMap& mu_V, const MultiMap& g)
{
    long long n = th.n, m = om.n;
    GSCochain out;
    out.n = static_cast<int>(n + m - 1);

    auto slot = [&](const MultiMap& tU, const MultiMap& oU) {
        MultiMap acc = MultiMap(tU.out_color(), tU.out_dim(),
                                std::vector<Color>(n + m - 1, tU.in_colors().empty()
                                                                  ? tU.out_color()
                                                                  : tU.in_colors()[0]),
                                std::vector<int>(n + m - 1, tU.in_dims().empty()
                                                                ? tU.out_dim()
                                                                : tU.in_dims()[0]));
        for (int s = 1; s <= n; ++s)
            acc += sign_pow((s + 1) * (m + 1)) * compose_at(tU, s, oU);
        for (int s = 1; s <= m; ++s)
            acc += sign_pow(n * m + n + m + (s + 1) * (n + 1)) * compose_at(oU, s, tU);
        return acc;
    };
    out.x_U = slot(th.x_U, om.x_U);
    out.x_V = slot(th.x_V, om.x_V);

    // mixed slot
    MultiMap acc(Color::W, th.x_V.out_dim(),
                 std::vector<Color>(n + m - 2, Color::B),
                 std::vector<int>(n + m - 2, th.x_U.in_dims().empty()
                                                 ? th.x_U.out_dim()
                                                 : th.x_U.in_dims()[0]));
    for (int s = 1; s <= n - 1; ++s)
        acc += sign_pow((s + 1) * (m + 1)) * compose_at(th.x_g, s, om.x_U);
    for (int s = 1; s <= m - 1; ++s)
        acc += sign_pow(n * m + n + m + (s + 1) * (n + 1)) * compose_at(om.x_g, s, th.x_U);
    for (int i = 1; i <= n; ++i)
        acc += sign_pow(n + 1 + (i - 1) * m) * plug_one(th.x_V, i, om.x_g, g);
    for (int j = 1; j <= m; ++j)
        acc += sign_pow(n * m + 1 + j * n) * plug_one(om.x_V, j, th.x_g, g);
    // cup products mu_V(x_g (x) y_g)
    acc += sign_pow(n * m + n + m + 1) * compose_at(compose_at(mu_V, 2, om.x_g), 1, th.x_g);
    acc += Rational(-1) * compose_at(compose_at(mu_V, 2, th.x_g), 1, om.x_g);
    out.x_g = acc;
    return out;
}

// higher brackets, k >= 3: only the mixed slot survives
inline GSCochain as_lk_formula(const std::vector<GSCochain>& th, const MultiMap& g,
                               int dimU, int dimV)
{
    int k = static_cast<int>(th.size());
    if (k < 3)
        throw std::invalid_argument("as_lk_formula: k >= 3 required");
    long long t = 3 - 2 * k;
    for (const auto& x : th)
        t += x.n;
    GSCochain out;
    out.n = static_cast<int>(t);
    out.x_U = MultiMap(Color::B, dimU, std::vector<Color>(t, Color::B),
                       std::vector<int>(t, dimU));
    out.x_V = MultiMap(Color::W, dimV, std::vector<Color>(t, Color::W),
                       std::vector<int>(t, dimV));
    MultiMap acc(Color::W, dimV, std::vector<Color>(t - 1, Color::B),
                 std::vector<int>(t - 1, dimU));

    long long nu = 0;
    for (int i = 1; i < k; ++i)
        nu += static_cast<long long>(k - i) * (th[i - 1].n - 1);
    Rational pre = sign_pow(k + nu); // (-1)^{k+1} * (-1)^{nu} * (-1) from the corolla sum

    for (int s = 0; s < k; ++s) {
        int ns = th[s].n;
        // (k-1)-tuples of distinct positions in {1..ns}
        std::vector<int> a(k, 0); // a[j] for j != s
        std::vector<bool> used(ns + 1, false);
        auto rec = [&](auto&& self, int j) -> void {
            if (j == k) {
                // sign (-1)^a from the block degrees
                std::vector<long long> r(ns + 1, 1);
                for (int q = 0; q < k; ++q)
                    if (q != s)
                        r[a[q]] = th[q].n - 1;
                long long e = 0;
                for (int i = 1; i <= ns; ++i)
                    for (int jj = i + 1; jj <= ns; ++jj)
                        e += r[i] * (r[jj] + 1);
                // routing sign for the insertions: the top vertex is tensored
                // last, inner blocks from the last slot to the first; parities
                // are those of the values as graded maps
                std::vector<int> pos, dpar;
                for (int q = 0; q < k; ++q) {
                    pos.push_back(q == s ? 1 : -a[q]);
                    dpar.push_back(th[q].n % 2);
                }
                std::vector<int> positions;
                std::vector<const MultiMap*> hs;
                for (int q = 0; q < k; ++q)
                    if (q != s) {
                        positions.push_back(a[q]);
                        hs.push_back(&th[q].x_g);
                    }
                acc += pre * sign_pow(e) * routing_sign(pos, dpar) *
                       plug_many(th[s].x_V, positions, hs, g);
                return;
            }
            if (j == s)
                return self(self, j + 1);
            for (int p = 1; p <= ns; ++p) {
                if (used[p])
                    continue;
                used[p] = true;
                a[j] = p;
                self(self, j + 1);
                used[p] = false;
            }
        };
        rec(rec, 0);
    }
    out.x_g = acc;
    return out;
}

// ----- lie morphisms ----------------------------------------------------------

// differential of Lie morphism cochains, components of arity (n_arity, n_arity,
// n_arity-1):  (b x_U, b x_V, -b x_g + x_V g^{(x)n} - g x_U)
inline SCochain lie_l1_formula(const SCochain& x, const MultiMap& mu_U, const MultiMap& mu_V,
                               const MultiMap& g)
{
    SCochain out;
    out.n = x.n + 1;
    out.x_U = chevalley_eilenberg_b(x.x_U, module_uu(mu_U));
    out.x_V = chevalley_eilenberg_b(x.x_V, module_vv(mu_V));
    out.x_g = Rational(-1) * chevalley_eilenberg_b(x.x_g, module_uv(mu_U, mu_V, g)) +
              precompose_all(x.x_V, g) - compose_at(g, 1, x.x_U);
    return out;
}

// sum over a set of signed permutations of (base o sigma)
inline MultiMap unshuffle_sum(const MultiMap& base, const std::vector<SignedPermutation>& sh)
{
    MultiMap acc = Rational(0) * base;
    for (const auto& su : sh)
        acc += Rational(su.sign) * apply_permutation(base, su.perm);
    return acc;
}

// binary bracket for Lie morphism cochains of complex degrees n, m; the
// triples have component arities (n+1, n+1, n).
inline SCochain lie_l2_formula(const SCochain& th, const SCochain& om, int n, int m,
                               const MultiMap& mu_U, const MultiMap& mu_V, const MultiMap& g)
{
    SCochain out;
    out.n = n + m + 1;
    auto slot = [&](const MultiMap& tU, const MultiMap& oU) {
        MultiMap acc = sign_pow(static_cast<long long>(n) * m + 1) *
                       unshuffle_sum(compose_at(tU, 1, oU), enumerate_unshuffles(m + 1, n));
        acc += unshuffle_sum(compose_at(oU, 1, tU), enumerate_unshuffles(n + 1, m));
        return acc;
    };
    out.x_U = slot(th.x_U, om.x_U);
    out.x_V = slot(th.x_V, om.x_V);

    MultiMap acc = sign_pow(static_cast<long long>(n) * m + m + 1) *
                   unshuffle_sum(compose_at(th.x_g, 1, om.x_U),
                                 enumerate_unshuffles(m + 1, n - 1));
    acc += sign_pow(n) *
           unshuffle_sum(compose_at(om.x_g, 1, th.x_U), enumerate_unshuffles(n + 1, m - 1));
    acc += sign_pow(n + 1) *
           unshuffle_sum(plug_one(th.x_V, n + 1, om.x_g, g), enumerate_unshuffles(n, m));
    acc += sign_pow(n + 1 + static_cast<long long>(n - 1) * (m - 1)) *
           unshuffle_sum(plug_one(om.x_V, m + 1, th.x_g, g), enumerate_unshuffles(m, n));
    if (n <= m) {
        MultiMap cup = compose_at(compose_at(mu_V, 2, om.x_g), 1, th.x_g);
        acc += unshuffle_sum(cup, enumerate_block_unshuffles({n, m}));
    }
    if (m <= n) {
        MultiMap cup = compose_at(compose_at(mu_V, 2, th.x_g), 1, om.x_g);
        acc += sign_pow(static_cast<long long>(n) * m + 1) *
               unshuffle_sum(cup, enumerate_block_unshuffles({m, n}));
    }
    out.x_g = acc;
    return out;
}

// higher brackets for Lie morphism cochains, k >= 3 (complex degrees ns[]);
// only the mixed slot survives.  The admissible-tuple sign mirrors the
// coefficient of the corolla terms of the differential.
inline SCochain lie_lk_formula(const std::vector<SCochain>& th, const std::vector<int>& ns,
                               const MultiMap& g, int dimU, int dimV)
{
    int k = static_cast<int>(th.size());
    if (k < 3)
        throw std::invalid_argument("lie_lk_formula: k >= 3 required");
    long long t = 2 - k;
    for (int n : ns)
        t += n;
    SCochain out;
    out.n = static_cast<int>(t + 1);
    out.x_U = MultiMap(Color::B, dimU, std::vector<Color>(t + 1, Color::B),
                       std::vector<int>(t + 1, dimU));
    out.x_V = MultiMap(Color::W, dimV, std::vector<Color>(t + 1, Color::W),
                       std::vector<int>(t + 1, dimV));
    MultiMap acc(Color::W, dimV, std::vector<Color>(t, Color::B), std::vector<int>(t, dimU));

    long long nu = 0;
    for (int i = 1; i < k; ++i)
        nu += static_cast<long long>(k - i) * ns[i - 1];
    Rational pre = sign_pow(k + 1 + nu);

    for (int s = 0; s < k; ++s) {
        int L = ns[s] + 1; // arity of th[s].x_V
        if (L < k - 1)
            continue;
        std::vector<int> a(k, 0);
        std::vector<bool> used(L + 1, false);
        auto rec = [&](auto&& self, int j) -> void {
            if (j == k) {
                std::vector<int> r(L + 1, 1);
                for (int q = 0; q < k; ++q)
                    if (q != s)
                        r[a[q]] = ns[q];
                for (int p = 1; p < L; ++p)
                    if (r[p] > r[p + 1])
                        return; // not admissible
                long long e = static_cast<long long>(L) * (L - 1) / 2;
                for (int p = 1; p <= L - 1; ++p)
                    e += static_cast<long long>(r[p]) * (L - p);
                std::vector<int> pos, dpar;
                for (int q = 0; q < k; ++q) {
                    pos.push_back(q == s ? 1 : -a[q]);
                    dpar.push_back(((ns[q] - 1) % 2 + 2) % 2);
                }
                std::vector<int> positions;
                std::vector<const MultiMap*> hs;
                for (int q = 0; q < k; ++q)
                    if (q != s) {
                        positions.push_back(a[q]);
                        hs.push_back(&th[q].x_g);
                    }
                MultiMap base = plug_many(th[s].x_V, positions, hs, g);
                std::vector<int> blocks(r.begin() + 1, r.end());
                acc += pre * sign_pow(e) * routing_sign(pos, dpar) *
                       unshuffle_sum(base, enumerate_block_unshuffles(blocks));
                return;
            }
            if (j == s)
                return self(self, j + 1);
            for (int p = 1; p <= L; ++p) {
                if (used[p])
                    continue;
                used[p] = true;
                a[j] = p;
                self(self, j + 1);
                used[p] = false;
            }
        };
        rec(rec, 0);
    }
    out.x_g = acc;
    return out;
}

// ----- the iso diagram ---------------------------------------------------------

// A cochain over the iso model is a pair of arity-one maps; for odd complex
// degree it is Hom(U,V) + Hom(V,U), for even degree Hom(U,U) + Hom(V,V).
struct IsoPair {
    int degree = 1;
    MultiMap first, second;

    friend bool operator==(const IsoPair& a, const IsoPair& b)
    {
        return a.degree == b.degree && a.first == b.first && a.second == b.second;
    }
};

inline IsoPair iso_l0_formula(const MultiMap& F, const MultiMap& G, const Spaces& sp)
{
    IsoPair out;
    out.degree = 2;
    out.first = MultiMap::identity(sp, Color::B) - compose_at(G, 1, F);
    out.second = MultiMap::identity(sp, Color::W) - compose_at(F, 1, G);
    return out;
}

inline IsoPair iso_l1_formula(const IsoPair& w, const MultiMap& F, const MultiMap& G)
{
    IsoPair out;
    out.degree = w.degree + 1;
    if (w.degree % 2 == 1) {
        // (G a + b F, a G + F b)
        out.first = compose_at(G, 1, w.first) + compose_at(w.second, 1, F);
        out.second = compose_at(w.first, 1, G) + compose_at(F, 1, w.second);
    }
    else {
        // (F c - d F, G d - c G)
        out.first = compose_at(F, 1, w.first) - compose_at(w.second, 1, F);
        out.second = compose_at(G, 1, w.second) - compose_at(w.first, 1, G);
    }
    return out;
}

inline IsoPair iso_l2_formula(const IsoPair& x, const IsoPair& y)
{
    IsoPair out;
    out.degree = x.degree + y.degree;
    bool xo = x.degree % 2 == 1, yo = y.degree % 2 == 1;
    if (xo && yo) {
        out.first = compose_at(x.second, 1, y.first) + compose_at(y.second, 1, x.first);
        out.second = compose_at(x.first, 1, y.second) + compose_at(y.first, 1, x.second);
        return out;
    }
    if (xo && !yo) {
        out.first = compose_at(x.first, 1, y.first) - compose_at(y.second, 1, x.first);
        out.second = compose_at(x.second, 1, y.second) - compose_at(y.first, 1, x.second);
        return out;
    }
    if (!xo && yo) {
        IsoPair sw = iso_l2_formula(y, x);
        out.first = Rational(-1) * sw.first;
        out.second = Rational(-1) * sw.second;
        return out;
    }
    // both even: commutators
    out.first = compose_at(x.first, 1, y.first) - compose_at(y.first, 1, x.first);
    out.second = compose_at(x.second, 1, y.second) - compose_at(y.second, 1, x.second);
    return out;
}

} // namespace defc::oracle
