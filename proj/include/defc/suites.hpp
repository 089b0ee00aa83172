#pragma once

#include <string>
#include <vector>

#include "defc/classical.hpp"
#include "defc/engine.hpp"
#include "defc/oracles.hpp"
#include "defc/sampling.hpp"

namespace defc {

struct SuiteResult {
    bool ok = true;
    std::vector<std::string> lines;

    void check(const std::string& what, bool pass)
    {
        ok = ok && pass;
        lines.push_back(std::string(pass ? "ok   " : "FAIL ") + what);
    }
    void note(const std::string& what) { lines.push_back("     " + what); }
};

// symbolic d^2 = 0 for every generator up to the given internal degree
inline SuiteResult suite_d2_symbolic(ModelId model, int max_degree)
{
    const ModelTable& tbl = model_table(model);
    SuiteResult r;
    for (int d = 0; d <= max_degree; ++d)
        for (GeneratorId g : tbl.generators_of_degree(d)) {
            FormalSum dd = tbl.sum_differential(tbl.differential(g));
            r.check(model_name(model) + " d(d(" + gen_name(g) + ")) = 0", dd.empty());
        }
    return r;
}

namespace detail {

inline std::vector<AlgebraInstance> suite_instances(ModelId model)
{
    std::vector<AlgebraInstance> v = bundled_instances(model);
    if (model == ModelId::LieMorphism)
        v.push_back(lie_heisenberg3());
    return v;
}

inline GSCochain as_components(const Cochain& c, const Spaces& sp)
{
    return cochain_components(c, sp);
}

inline oracle::IsoPair iso_components(const Cochain& c, const Spaces& sp)
{
    oracle::IsoPair p;
    p.degree = c.degree;
    p.first = c.value({GenFamily::F, c.degree - 1}, sp);
    p.second = c.value({GenFamily::G, c.degree - 1}, sp);
    return p;
}

inline Cochain iso_pair_cochain(const oracle::IsoPair& p)
{
    Cochain c = zero_cochain(ModelId::Iso, p.degree);
    if (!p.first.is_zero())
        c.set({GenFamily::F, p.degree - 1}, p.first);
    if (!p.second.is_zero())
        c.set({GenFamily::G, p.degree - 1}, p.second);
    return c;
}

inline bool engine_matches_iso_pair(const Cochain& got, const oracle::IsoPair& want,
                                    const Spaces& sp)
{
    return iso_components(got, sp) == want;
}

} // namespace detail

// d(d(theta)) = 0 on random homogeneous cochains
inline SuiteResult suite_delta2(ModelId model, uint64_t seed, int trials, int max_degree)
{
    SuiteResult r;
    Rng rng(seed);
    auto insts = detail::suite_instances(model);
    int nontrivial = 0;
    for (int t = 0; t < trials; ++t) {
        const AlgebraInstance& a = insts[t % insts.size()];
        int deg = 1 + rng.uniform(0, max_degree - 1);
        Cochain th = random_cochain(rng, model, a.spaces, deg);
        nontrivial += !th.is_zero();
        Cochain dd = delta(delta(th, a), a);
        if (!dd.is_zero()) {
            r.check(model_name(model) + " delta^2 trial " + std::to_string(t), false);
            return r;
        }
    }
    r.check(model_name(model) + " delta^2 = 0 on " + std::to_string(trials) +
                " random cochains (" + std::to_string(nontrivial) + " nonzero)",
            true);
    return r;
}

// generalized Jacobi relations for n = 1, 2, 3
inline SuiteResult suite_linfty(ModelId model, uint64_t seed, int trials)
{
    SuiteResult r;
    Rng rng(seed);
    auto insts = detail::suite_instances(model);
    int max_deg = model == ModelId::Iso ? 3 : 2;
    for (int n = 1; n <= 3; ++n) {
        int bad = 0;
        for (int t = 0; t < trials; ++t) {
            const AlgebraInstance& a = insts[t % insts.size()];
            std::vector<Cochain> xs;
            for (int q = 0; q < n; ++q)
                xs.push_back(random_cochain(rng, model, a.spaces, 1 + rng.uniform(0, max_deg - 1)));
            if (!ln_relation_residual(n, xs, a).is_zero())
                ++bad;
        }
        r.check(model_name(model) + " relation n=" + std::to_string(n) + " on " +
                    std::to_string(trials) + " samples",
                bad == 0);
    }
    return r;
}

// engine against the closed-form brackets
inline SuiteResult suite_oracle(ModelId model, uint64_t seed, int trials)
{
    SuiteResult r;
    Rng rng(seed);

    if (model == ModelId::Iso) {
        int bad0 = 0, bad1 = 0, bad2 = 0, bad3 = 0;
        for (int t = 0; t < trials; ++t) {
            AlgebraInstance a;
            int pick = t % 4;
            if (pick == 0)
                a = iso_trivial2();
            else if (pick == 1)
                a = iso_one_dim();
            else if (pick == 2)
                a = iso_random2(rng);
            else {
                // arbitrary, not necessarily mutually inverse
                Spaces sp(2, 2);
                a = make_iso_instance(sp,
                                      random_multimap(rng, sp, Color::W, {Color::B}),
                                      random_multimap(rng, sp, Color::B, {Color::W}));
            }
            const MultiMap &F = a.map("F"), &G = a.map("G");
            if (!detail::engine_matches_iso_pair(l_zero(a),
                                                 oracle::iso_l0_formula(F, G, a.spaces),
                                                 a.spaces))
                ++bad0;
            int px = 1 + rng.uniform(0, 2), py = 1 + rng.uniform(0, 2);
            Cochain x = random_cochain(rng, model, a.spaces, px);
            Cochain y = random_cochain(rng, model, a.spaces, py);
            auto xp = detail::iso_components(x, a.spaces);
            auto yp = detail::iso_components(y, a.spaces);
            if (!detail::engine_matches_iso_pair(delta(x, a), oracle::iso_l1_formula(xp, F, G),
                                                 a.spaces))
                ++bad1;
            if (!detail::engine_matches_iso_pair(l_k({x, y}, a), oracle::iso_l2_formula(xp, yp),
                                                 a.spaces))
                ++bad2;
            Cochain z = random_cochain(rng, model, a.spaces, 1 + rng.uniform(0, 2));
            if (!l_k({x, y, z}, a).is_zero())
                ++bad3;
        }
        r.check("iso l_0 matches the closed form", bad0 == 0);
        r.check("iso l_1 matches the closed form", bad1 == 0);
        r.check("iso l_2 matches the closed form (all parities)", bad2 == 0);
        r.check("iso l_k = 0 for k >= 3", bad3 == 0);
        return r;
    }

    bool lie = model == ModelId::LieMorphism;
    auto insts = detail::suite_instances(model);
    int bad1 = 0, bad2 = 0, bad3 = 0, bad4 = 0;
    for (int t = 0; t < trials; ++t) {
        const AlgebraInstance& a = insts[t % insts.size()];
        const MultiMap &mu_U = a.map("mu_U"), &mu_V = a.map("mu_V"), &g = a.map("g");
        int maxdeg = 2;
        int p1 = 1 + rng.uniform(0, maxdeg - 1), p2 = 1 + rng.uniform(0, maxdeg - 1);
        Cochain th = random_cochain(rng, model, a.spaces, p1);
        Cochain om = random_cochain(rng, model, a.spaces, p2);
        GSCochain tx = detail::as_components(th, a.spaces);
        GSCochain ox = detail::as_components(om, a.spaces);

        if (lie) {
            SCochain want = oracle::lie_l1_formula(tx, mu_U, mu_V, g);
            if (!(detail::as_components(delta(th, a), a.spaces) == want))
                ++bad1;
            SCochain w2 = oracle::lie_l2_formula(tx, ox, p1, p2, mu_U, mu_V, g);
            if (!(detail::as_components(l_k({th, om}, a), a.spaces) == w2))
                ++bad2;
            int p3 = 1 + rng.uniform(0, maxdeg - 1);
            Cochain ch = random_cochain(rng, model, a.spaces, p3);
            SCochain w3 = oracle::lie_lk_formula(
                {tx, ox, detail::as_components(ch, a.spaces)}, {p1, p2, p3}, g,
                a.spaces.B.dim, a.spaces.W.dim);
            if (!(detail::as_components(l_k({th, om, ch}, a), a.spaces) == w3))
                ++bad3;
            Cochain x4 = random_cochain(rng, model, a.spaces, 2);
            SCochain w4 = oracle::lie_lk_formula(
                {tx, ox, detail::as_components(ch, a.spaces),
                 detail::as_components(x4, a.spaces)},
                {p1, p2, p3, 2}, g, a.spaces.B.dim, a.spaces.W.dim);
            if (!(detail::as_components(l_k({th, om, ch, x4}, a), a.spaces) == w4))
                ++bad4;
        }
        else {
            GSCochain want = oracle::as_l1_formula(tx, mu_U, mu_V, g);
            if (!(detail::as_components(delta(th, a), a.spaces) == want))
                ++bad1;
            GSCochain w2 = oracle::as_l2_formula(tx, ox, mu_U, mu_V, g);
            if (!(detail::as_components(l_k({th, om}, a), a.spaces) == w2))
                ++bad2;
            int p3 = 1 + rng.uniform(0, maxdeg - 1);
            Cochain ch = random_cochain(rng, model, a.spaces, p3);
            GSCochain w3 = oracle::as_lk_formula({tx, ox, detail::as_components(ch, a.spaces)},
                                                 g, a.spaces.B.dim, a.spaces.W.dim);
            if (!(detail::as_components(l_k({th, om, ch}, a), a.spaces) == w3))
                ++bad3;
            Cochain x4 = random_cochain(rng, model, a.spaces, 2);
            GSCochain w4 = oracle::as_lk_formula(
                {tx, ox, detail::as_components(ch, a.spaces),
                 detail::as_components(x4, a.spaces)},
                g, a.spaces.B.dim, a.spaces.W.dim);
            if (!(detail::as_components(l_k({th, om, ch, x4}, a), a.spaces) == w4))
                ++bad4;
        }
    }
    std::string nm = model_name(model);
    r.check(nm + " engine l_1 matches the differential formula", bad1 == 0);
    r.check(nm + " engine l_2 matches the closed form", bad2 == 0);
    r.check(nm + " engine l_3 matches the closed form", bad3 == 0);
    r.check(nm + " engine l_4 matches the closed form", bad4 == 0);
    return r;
}

// vanishing of l_k when every input degree p satisfies p + 1 < k - 1,
// and of every l_k for k >= 3 over the iso model
inline SuiteResult suite_vanishing(ModelId model, uint64_t seed, int trials)
{
    SuiteResult r;
    Rng rng(seed);
    if (model == ModelId::Iso) {
        auto insts = detail::suite_instances(model);
        for (int k = 3; k <= 5; ++k) {
            int bad = 0;
            for (int t = 0; t < trials; ++t) {
                const AlgebraInstance& a = insts[t % insts.size()];
                std::vector<Cochain> xs;
                for (int q = 0; q < k; ++q)
                    xs.push_back(random_cochain(rng, model, a.spaces, 1 + rng.uniform(0, 2)));
                if (!l_k(xs, a).is_zero())
                    ++bad;
            }
            r.check("iso l_" + std::to_string(k) + " = 0", bad == 0);
        }
        return r;
    }
    auto insts = detail::suite_instances(model);
    for (int k = 3; k <= 5; ++k) {
        int bad = 0;
        for (int t = 0; t < trials; ++t) {
            const AlgebraInstance& a = insts[t % insts.size()];
            std::vector<Cochain> xs;
            for (int q = 0; q < k; ++q) {
                int maxp = k - 3; // p + 1 < k - 1
                int p = maxp >= 1 ? 1 + rng.uniform(0, maxp - 1) : 0;
                xs.push_back(p >= 1 ? random_cochain(rng, model, a.spaces, p)
                                    : zero_cochain(model, 0));
            }
            if (!l_k(xs, a).is_zero())
                ++bad;
        }
        r.check(model_name(model) + " l_" + std::to_string(k) + " vanishes on low degrees",
                bad == 0);
    }
    return r;
}

// transport isomorphisms intertwine the differentials
inline SuiteResult suite_transport(ModelId model, uint64_t seed, int trials)
{
    SuiteResult r;
    Rng rng(seed);
    auto insts = detail::suite_instances(model);
    bool lie = model == ModelId::LieMorphism;
    int bad = 0, badrt = 0;
    for (int t = 0; t < trials; ++t) {
        const AlgebraInstance& a = insts[t % insts.size()];
        const MultiMap &mu_U = a.map("mu_U"), &mu_V = a.map("mu_V"), &g = a.map("g");
        Cochain th = random_cochain(rng, model, a.spaces, 1 + rng.uniform(0, 2));
        Cochain dth = delta(th, a);
        if (lie) {
            SCochain x = prop_to_s(th, a.spaces);
            if (!(prop_to_s(dth, a.spaces) == s_delta(x, mu_U, mu_V, g)))
                ++bad;
            if (!(s_to_prop(x) == th))
                ++badrt;
        }
        else {
            GSCochain x = prop_to_gs(th, a.spaces);
            if (!(prop_to_gs(dth, a.spaces) == gs_d(x, mu_U, mu_V, g)))
                ++bad;
            if (!(gs_to_prop(x) == th))
                ++badrt;
        }
    }
    std::string nm = model_name(model);
    r.check(nm + " transport intertwines the differentials", bad == 0);
    r.check(nm + " transport round-trips", badrt == 0);
    return r;
}

namespace detail {

// conjugate an assoc/lie instance by seeded basis changes (stays strict)
inline AlgebraInstance conjugate_instance(Rng& rng, const AlgebraInstance& a)
{
    Spaces sp = a.spaces;
    if (sp.B.dim != 2 || sp.W.dim != 2)
        return a;
    Spaces spB(2, 2);
    auto invertible = [&](Color c) {
        while (true) {
            Rational p(rng.uniform(-2, 2)), q(rng.uniform(-2, 2));
            Rational s(rng.uniform(-2, 2)), u(rng.uniform(-2, 2));
            Rational det = p * u - q * s;
            if (det.is_zero())
                continue;
            MultiMap P = MultiMap::zero(sp, c, {c});
            P.at({0, {0}}) = p;
            P.at({0, {1}}) = q;
            P.at({1, {0}}) = s;
            P.at({1, {1}}) = u;
            MultiMap Pinv = MultiMap::zero(sp, c, {c});
            Pinv.at({0, {0}}) = u / det;
            Pinv.at({0, {1}}) = Rational(-1) * q / det;
            Pinv.at({1, {0}}) = Rational(-1) * s / det;
            Pinv.at({1, {1}}) = p / det;
            return std::make_pair(P, Pinv);
        }
    };
    auto [P, Pinv] = invertible(Color::B);
    auto [Q, Qinv] = invertible(Color::W);
    auto conj_mult = [&](const MultiMap& mu, const MultiMap& T, const MultiMap& Tinv) {
        MultiMap m = compose_at(T, 1, mu);
        m = compose_at(m, 1, Tinv);
        m = compose_at(m, 2, Tinv);
        return m;
    };
    MultiMap mu = conj_mult(a.map("mu_U"), P, Pinv);
    MultiMap nu = conj_mult(a.map("mu_V"), Q, Qinv);
    MultiMap g = compose_at(compose_at(Q, 1, a.map("g")), 1, Pinv);
    return make_assoc_instance(a.model, sp, mu, nu, g);
}

inline Cochain encode_structure(ModelId model, const AlgebraInstance& src)
{
    Cochain k = zero_cochain(model, 1);
    if (!src.map("mu_U").is_zero())
        k.set({GenFamily::Mu, 2}, src.map("mu_U"));
    if (!src.map("mu_V").is_zero())
        k.set({GenFamily::Nu, 2}, src.map("mu_V"));
    if (!src.map("g").is_zero())
        k.set({GenFamily::F, 1}, src.map("g"));
    return k;
}

} // namespace detail

// quantum master equation characterizes the algebra structures; when
// min_each_way > 0 the run must contain at least that many solutions and
// non-solutions
inline SuiteResult suite_qme(ModelId model, uint64_t seed, int trials, int min_each_way = 0)
{
    SuiteResult r;
    Rng rng(seed);
    if (model == ModelId::Iso) {
        AlgebraInstance bg = iso_trivial2();
        int bad_pos = 0, bad_neg = 0, neg_seen = 0;
        for (int t = 0; t < trials; ++t) {
            auto [F, G] = random_inverse_pair2(rng, bg.spaces);
            Cochain kap = zero_cochain(model, 1);
            kap.set({GenFamily::F, 0}, F);
            kap.set({GenFamily::G, 0}, G);
            if (!qme_residual(kap, bg, 2).is_zero())
                ++bad_pos;

            MultiMap Fr = random_multimap(rng, bg.spaces, Color::W, {Color::B});
            MultiMap Gr = random_multimap(rng, bg.spaces, Color::B, {Color::W});
            bool inverse = compose_at(Gr, 1, Fr) == MultiMap::identity(bg.spaces, Color::B) &&
                           compose_at(Fr, 1, Gr) == MultiMap::identity(bg.spaces, Color::W);
            Cochain kr = zero_cochain(model, 1);
            if (!Fr.is_zero())
                kr.set({GenFamily::F, 0}, Fr);
            if (!Gr.is_zero())
                kr.set({GenFamily::G, 0}, Gr);
            bool zero = qme_residual(kr, bg, 2).is_zero();
            if (!inverse)
                ++neg_seen;
            if (zero != inverse)
                ++bad_neg;
        }
        r.check("iso: residual vanishes for mutually inverse pairs", bad_pos == 0);
        r.check("iso: residual detects non-inverse pairs", bad_neg == 0);
        if (min_each_way > 0)
            r.check("iso: sampled " + std::to_string(min_each_way) + "+ instances each way",
                    trials >= min_each_way && neg_seen >= min_each_way);
        return r;
    }

    // zero background: the degree-one solutions are exactly the strict structures
    Spaces sp(2, 2);
    AlgebraInstance bg =
        make_assoc_instance(model, sp, zero_mult(sp, Color::B), zero_mult(sp, Color::W),
                            MultiMap::zero(sp, Color::W, {Color::B}));
    std::vector<AlgebraInstance> valids;
    for (const AlgebraInstance& base : bundled_instances(model))
        if (base.spaces.B.dim == 2 && base.spaces.W.dim == 2)
            valids.push_back(base);
    int bad_pos = 0, bad_neg = 0, pos_seen = 0, neg_seen = 0;
    for (int t = 0; t < trials; ++t) {
        AlgebraInstance cand = detail::conjugate_instance(rng, valids[t % valids.size()]);
        Cochain kap = detail::encode_structure(model, cand);
        ++pos_seen;
        if (!qme_residual(kap, bg, 3).is_zero())
            ++bad_pos;

        // perturb: for assoc any entry, for lie a skew bracket entry or g
        AlgebraInstance pert = cand;
        if (model == ModelId::AssocMorphism && rng.uniform(0, 1) == 0) {
            MultiMap mu = pert.map("mu_U");
            mu.at({rng.uniform(0, 1), {rng.uniform(0, 1), rng.uniform(0, 1)}}) += Rational(1);
            pert.structure.at("mu_U") = mu;
        }
        else {
            MultiMap g = pert.map("g");
            g.at({rng.uniform(0, 1), {rng.uniform(0, 1)}}) += Rational(1);
            pert.structure.at("g") = g;
        }
        bool valid = validate_algebra(pert).ok;
        Cochain kp = detail::encode_structure(model, pert);
        bool zero = qme_residual(kp, bg, 3).is_zero();
        if (!valid)
            ++neg_seen;
        if (zero != valid)
            ++bad_neg;
    }
    std::string nm = model_name(model);
    r.check(nm + ": residual vanishes on " + std::to_string(pos_seen) + " valid structures",
            bad_pos == 0);
    r.check(nm + ": residual agrees with the axiom check on perturbations (" +
                std::to_string(neg_seen) + " invalid sampled)",
            bad_neg == 0);
    if (min_each_way > 0)
        r.check(nm + ": sampled " + std::to_string(min_each_way) + "+ instances each way",
                pos_seen >= min_each_way && neg_seen >= min_each_way);
    return r;
}

// the iso-specific identities: l_2(l_0, w) = 0 and l_1 = l_2(chi, -)
inline SuiteResult suite_iso_identities(uint64_t seed, int trials)
{
    SuiteResult r;
    Rng rng(seed);
    std::vector<AlgebraInstance> insts = {iso_trivial2(), iso_one_dim()};
    {
        Rng seeded(seed ^ 0x5eedull);
        insts.push_back(iso_random2(seeded));
    }
    int bad_curv = 0, bad_chi = 0;
    for (int t = 0; t < trials; ++t) {
        const AlgebraInstance& a = insts[t % insts.size()];
        Cochain l0 = l_zero(a);
        Cochain w = random_cochain(rng, ModelId::Iso, a.spaces, 1 + rng.uniform(0, 2));
        if (!l_k({l0, w}, a).is_zero())
            ++bad_curv;
        Cochain chi = zero_cochain(ModelId::Iso, 1);
        if (!a.map("F").is_zero())
            chi.set({GenFamily::F, 0}, a.map("F"));
        if (!a.map("G").is_zero())
            chi.set({GenFamily::G, 0}, a.map("G"));
        if (!(delta(w, a) == l_k({chi, w}, a)))
            ++bad_chi;
    }
    r.check("iso l_2(l_0, w) = 0 for sampled w", bad_curv == 0);
    r.check("iso l_1(w) = l_2(chi, w) for sampled w", bad_chi == 0);
    return r;
}

} // namespace defc
