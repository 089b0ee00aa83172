#pragma once

#include <stdexcept>
#include <vector>

#include "defc/algebra.hpp"
#include "defc/model.hpp"

namespace defc {

// Decorates the chosen vertices of a term by the cochain values and every
// other vertex by the augmentation, then evaluates.  chosen[i] is the vertex
// receiving cochains[i]; a cochain not supported on its vertex' generator
// contributes the zero map.
inline MultiMap substitute_and_evaluate(const GraphTerm& t, const std::vector<int>& chosen,
                                        const std::vector<const Cochain*>& cochains,
                                        const AlgebraInstance& a)
{
    if (chosen.size() != cochains.size())
        throw std::invalid_argument("substitute_and_evaluate: arity mismatch");
    for (size_t i = 0; i < chosen.size(); ++i) {
        if (chosen[i] < 0 || chosen[i] >= t.vertex_count())
            throw std::invalid_argument("substitute_and_evaluate: vertex out of range");
        for (size_t j = i + 1; j < chosen.size(); ++j)
            if (chosen[i] == chosen[j])
                throw std::invalid_argument("substitute_and_evaluate: vertices not distinct");
    }
    auto decorate = [&](int v, GeneratorId g) -> MultiMap {
        for (size_t i = 0; i < chosen.size(); ++i)
            if (chosen[i] == v)
                return cochains[i]->value(g, a.spaces);
        return a.beta(g);
    };
    return graph_evaluate_v(t, decorate, a.spaces);
}

namespace detail {

// Rank of every vertex in the tensor word of the decorations: inner vertices
// come before the vertex they feed, and sibling subtrees are read from the
// last input slot to the first (the reverse of the prefix traversal).
inline std::vector<int> tensor_ranks(const GraphTerm& t)
{
    std::vector<int> rank(t.vertex_count(), 0);
    int next = t.vertex_count();
    std::function<void(int)> dfs = [&](int v) {
        rank[v] = --next;
        for (int sl : t.nodes[v].slots)
            if (sl >= 0)
                dfs(sl);
    };
    if (t.vertex_count() > 0)
        dfs(0);
    return rank;
}

// Koszul sign of routing the cochains to their vertices: one factor
// (-1)^{d_i d_j} for every pair i<j whose vertices appear in the tensor
// order of the decorations (d_i is the parity of the cochain as a graded
// map, degree-1).
inline int tuple_koszul_sign(const std::vector<int>& chosen, const std::vector<int>& dpar,
                             const std::vector<int>& rank)
{
    long long e = 0;
    for (size_t i = 0; i < chosen.size(); ++i)
        for (size_t j = i + 1; j < chosen.size(); ++j)
            if (rank[chosen[i]] < rank[chosen[j]])
                e += static_cast<long long>(dpar[i]) * dpar[j];
    return e % 2 ? -1 : 1;
}

// (-1)^{k+1} (-1)^{(k-1)|f_1| + (k-2)|f_2| + ... + |f_{k-1}|}
inline Rational lk_prefactor(const std::vector<int>& degrees)
{
    long long k = static_cast<long long>(degrees.size());
    long long e = k + 1;
    for (long long i = 1; i < k; ++i)
        e += (k - i) * degrees[i - 1];
    return sign_pow(e);
}

} // namespace detail

// The graph-substitution bracket: the value of l_k(f_1,...,f_k) on the
// generator xi, summing over the terms of the differential of xi and over all
// ordered k-tuples of distinct vertices.
inline MultiMap lk_on_generator(const std::vector<const Cochain*>& inputs,
                                const AlgebraInstance& a, GeneratorId xi)
{
    const ModelTable& tbl = model_table(a.model);
    GenInfo xi_info = tbl.info(xi);
    MultiMap acc = MultiMap::zero(a.spaces, xi_info.out, xi_info.ins);
    size_t k = inputs.size();

    std::vector<int> degrees, dpar;
    for (const Cochain* c : inputs) {
        degrees.push_back(c->degree);
        dpar.push_back(((c->degree - 1) % 2 + 2) % 2);
    }

    auto beta_fn = [&](GeneratorId g) { return a.beta(g); };

    for (const auto& [coeff, t] : tbl.differential(xi).terms()) {
        int V = t.vertex_count();
        if (k == 0) {
            bool live = true;
            for (int v = 0; v < V; ++v)
                if (tbl.degree(t.nodes[v].gen) != 0)
                    live = false;
            if (live)
                acc += coeff * graph_evaluate(t, beta_fn, a.spaces);
            continue;
        }
        if (V < static_cast<int>(k))
            continue;
        std::vector<int> rank = detail::tensor_ranks(t);
        // vertices each cochain may decorate, and vertices the augmentation
        // cannot kill
        std::vector<std::vector<int>> candidates(k);
        for (size_t i = 0; i < k; ++i)
            for (int v = 0; v < V; ++v)
                if (inputs[i]->supports(t.nodes[v].gen))
                    candidates[i].push_back(v);
        std::vector<bool> beta_ok(V);
        int n_bad = 0;
        for (int v = 0; v < V; ++v) {
            beta_ok[v] = tbl.degree(t.nodes[v].gen) == 0;
            n_bad += !beta_ok[v];
        }

        std::vector<int> chosen(k, -1);
        std::vector<bool> used(V, false);
        auto rec = [&](auto&& self, size_t i, int bad_left) -> void {
            if (i == k) {
                if (bad_left != 0)
                    return;
                int kappa = detail::tuple_koszul_sign(chosen, dpar, rank);
                auto decorate = [&](int v, GeneratorId g) -> MultiMap {
                    for (size_t q = 0; q < k; ++q)
                        if (chosen[q] == v)
                            return inputs[q]->value(g, a.spaces);
                    return a.beta(g);
                };
                acc += (coeff * Rational(kappa)) * graph_evaluate_v(t, decorate, a.spaces);
                return;
            }
            for (int v : candidates[i]) {
                if (used[v])
                    continue;
                used[v] = true;
                chosen[i] = v;
                self(self, i + 1, bad_left - !beta_ok[v]);
                used[v] = false;
            }
        };
        rec(rec, 0, n_bad);
    }
    return acc;
}

// l_k of homogeneous cochains, computed on `targets` (default: the full
// generator set of the output degree).
inline Cochain l_k(const std::vector<const Cochain*>& inputs, const AlgebraInstance& a,
                   const std::vector<GeneratorId>* targets = nullptr)
{
    const ModelTable& tbl = model_table(a.model);
    if (inputs.empty() && !tbl.has_curvature())
        throw std::invalid_argument("l_0 exists only for models with constant terms in the "
                                    "differential");
    std::vector<int> degrees;
    int degsum = 0;
    for (const Cochain* c : inputs) {
        if (c->model != a.model)
            throw std::invalid_argument("l_k: cochain/algebra model mismatch");
        degrees.push_back(c->degree);
        degsum += c->degree;
    }
    int k = static_cast<int>(inputs.size());
    int out_degree = 2 - k + degsum;
    Cochain out = zero_cochain(a.model, out_degree);

    Rational pre = detail::lk_prefactor(degrees);
    std::vector<GeneratorId> gens =
        targets ? *targets : tbl.generators_of_degree(out_degree - 1);
    for (GeneratorId xi : gens) {
        MultiMap m = pre * lk_on_generator(inputs, a, xi);
        if (m.is_zero())
            continue;
        if (tbl.info(xi).skew) {
            // the sums land in alternating maps; the antisymmetrization must
            // fix them, which is equivalent to alternation slot by slot
            if (!m.is_alternating())
                throw std::logic_error("l_k: value on " + gen_name(xi) +
                                       " is not alternating");
        }
        out.values.emplace(xi, std::move(m));
    }
    return out;
}

inline Cochain l_k(const std::vector<Cochain>& inputs, const AlgebraInstance& a,
                   const std::vector<GeneratorId>* targets = nullptr)
{
    std::vector<const Cochain*> ptrs;
    for (const auto& c : inputs)
        ptrs.push_back(&c);
    return l_k(ptrs, a, targets);
}

// the differential of the deformation complex
inline Cochain delta(const Cochain& x, const AlgebraInstance& a)
{
    return l_k(std::vector<const Cochain*>{&x}, a);
}

// curvature term l_0 (models with constant terms only)
inline Cochain l_zero(const AlgebraInstance& a)
{
    return l_k(std::vector<const Cochain*>{}, a);
}

// Exact residual of the n-th generalized Jacobi relation
//   sum_{i+j=n+1} sum_sigma chi(sigma) (-1)^{i(j-1)}
//       l_j(l_i(x_{sigma(1)},...,x_{sigma(i)}), x_{sigma(i+1)},...,x_{sigma(n)})
// over all (i,n-i)-unshuffles; zero iff the relation holds.
inline Cochain ln_relation_residual(int n, const std::vector<Cochain>& xs,
                                    const AlgebraInstance& a)
{
    if (static_cast<int>(xs.size()) != n || n < 1)
        throw std::invalid_argument("ln_relation_residual: need n inputs");
    std::vector<int> degrees;
    int degsum = 0;
    for (const auto& x : xs) {
        degrees.push_back(x.degree);
        degsum += x.degree;
    }
    Cochain res = zero_cochain(a.model, degsum + 3 - n);
    for (int i = 1; i <= n; ++i) {
        int j = n + 1 - i;
        Rational outer = sign_pow(static_cast<long long>(i) * (j - 1));
        for (const auto& su : enumerate_unshuffles(i, n - i)) {
            Rational chi = koszul_chi(su.perm, degrees);
            std::vector<const Cochain*> head;
            for (int q = 0; q < i; ++q)
                head.push_back(&xs[su.perm[q]]);
            Cochain inner = l_k(head, a);
            std::vector<const Cochain*> args;
            args.push_back(&inner);
            for (int q = i; q < n; ++q)
                args.push_back(&xs[su.perm[q]]);
            res += (outer * chi) * l_k(args, a);
        }
    }
    return res;
}

// Quantum master equation residual
//   (-l_0) + delta(kappa) + (1/2!) l_2(kappa,kappa) - (1/3!) l_3(...) - ...
// with the sign pattern (-1)^{floor((k-1)/2)}/k!, evaluated exactly up to
// k_max.  k_max below the model's vanishing bound is refused.
inline Cochain qme_residual(const Cochain& kappa, const AlgebraInstance& a, int k_max)
{
    if (kappa.degree != 1)
        throw std::invalid_argument("qme_residual: kappa must have degree 1");
    int bound = a.model == ModelId::Iso ? 2 : 3;
    if (k_max < bound)
        throw std::invalid_argument("qme_residual: k_max below the vanishing bound " +
                                    std::to_string(bound));
    Cochain res = zero_cochain(a.model, 2);
    if (model_table(a.model).has_curvature())
        res += Rational(-1) * l_zero(a);
    Rational factorial(1);
    for (int k = 1; k <= k_max; ++k) {
        factorial *= Rational(k);
        std::vector<const Cochain*> args(static_cast<size_t>(k), &kappa);
        Rational coeff = sign_pow((k - 1) / 2) / factorial;
        res += coeff * l_k(args, a);
    }
    return res;
}

} // namespace defc
