#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "defc/perm.hpp"
#include "defc/term.hpp"

namespace defc {

enum class ModelId : uint8_t { AssocMorphism, LieMorphism, Iso };

inline std::string model_name(ModelId m)
{
    switch (m) {
    case ModelId::AssocMorphism: return "assoc_morphism";
    case ModelId::LieMorphism: return "lie_morphism";
    default: return "iso";
    }
}

inline ModelId parse_model(const std::string& s)
{
    if (s == "assoc_morphism" || s == "assoc")
        return ModelId::AssocMorphism;
    if (s == "lie_morphism" || s == "lie")
        return ModelId::LieMorphism;
    if (s == "iso")
        return ModelId::Iso;
    throw std::invalid_argument("unknown model: " + s);
}

struct GenInfo {
    Color out;
    std::vector<Color> ins;
    int degree;
    bool skew; // values on this generator must be alternating
};

// Generator roster, internal-degree bookkeeping, differential and
// augmentation data for one of the three models.
class ModelTable {
  public:
    explicit ModelTable(ModelId id) : id_(id) {}

    ModelId id() const { return id_; }

    bool valid(GeneratorId g) const
    {
        if (id_ == ModelId::Iso)
            return (g.family == GenFamily::F || g.family == GenFamily::G) && g.index >= 0;
        switch (g.family) {
        case GenFamily::Mu:
        case GenFamily::Nu: return g.index >= 2;
        case GenFamily::F: return g.index >= 1;
        default: return false;
        }
    }

    GenInfo info(GeneratorId g) const
    {
        if (!valid(g))
            throw std::invalid_argument("generator " + gen_name(g) + " not valid for model " +
                                        model_name(id_));
        if (id_ == ModelId::Iso) {
            bool even = g.index % 2 == 0;
            if (g.family == GenFamily::F)
                return {even ? Color::W : Color::B, {Color::B}, g.index, false};
            return {even ? Color::B : Color::W, {Color::W}, g.index, false};
        }
        bool skew = id_ == ModelId::LieMorphism;
        switch (g.family) {
        case GenFamily::Mu:
            return {Color::B, std::vector<Color>(g.index, Color::B), g.index - 2, skew};
        case GenFamily::Nu:
            return {Color::W, std::vector<Color>(g.index, Color::W), g.index - 2, skew};
        default:
            return {Color::W, std::vector<Color>(g.index, Color::B), g.index - 1, skew};
        }
    }

    int degree(GeneratorId g) const { return info(g).degree; }

    // generators of a given internal degree (the support of a homogeneous
    // cochain of degree d+1)
    std::vector<GeneratorId> generators_of_degree(int d) const
    {
        std::vector<GeneratorId> out;
        if (d < 0)
            return out;
        if (id_ == ModelId::Iso) {
            out.push_back({GenFamily::F, d});
            out.push_back({GenFamily::G, d});
        }
        else {
            out.push_back({GenFamily::Mu, d + 2});
            out.push_back({GenFamily::Nu, d + 2});
            if (d + 1 >= 1)
                out.push_back({GenFamily::F, d + 1});
        }
        return out;
    }

    // generators whose image under the augmentation-to-algebra map is nonzero
    std::vector<GeneratorId> beta_supported() const
    {
        if (id_ == ModelId::Iso)
            return {{GenFamily::F, 0}, {GenFamily::G, 0}};
        return {{GenFamily::Mu, 2}, {GenFamily::Nu, 2}, {GenFamily::F, 1}};
    }

    // generators whose differential expresses the algebra axioms
    std::vector<GeneratorId> axiom_generators() const
    {
        if (id_ == ModelId::Iso)
            return {{GenFamily::F, 1}, {GenFamily::G, 1}};
        return {{GenFamily::Mu, 3}, {GenFamily::Nu, 3}, {GenFamily::F, 2}};
    }

    bool has_curvature() const { return id_ == ModelId::Iso; }

    // ----- canonical form ---------------------------------------------------

    // Brings a term to canonical form.  For the skew models the children of
    // every vertex are sorted, and each transposition contributes the sign of
    // the generator symmetry together with the Koszul sign of reordering the
    // subtree decorations.
    std::pair<Rational, GraphTerm> canonicalize(GraphTerm t) const
    {
        check_colors(t);
        t.normalize_order();
        if (t.unit || id_ != ModelId::LieMorphism)
            return {Rational(1), t};
        Rational sign(1);
        sort_children(t, 0, sign);
        t.normalize_order();
        return {sign, t};
    }

    void check_colors(const GraphTerm& t) const
    {
        if (t.unit)
            return;
        for (const auto& nd : t.nodes) {
            GenInfo gi = info(nd.gen);
            if (nd.slots.size() != gi.ins.size())
                throw std::invalid_argument("ill-formed term: arity mismatch at " +
                                            gen_name(nd.gen));
            for (size_t i = 0; i < nd.slots.size(); ++i)
                if (nd.slots[i] >= 0 && info(t.nodes[nd.slots[i]].gen).out != gi.ins[i])
                    throw std::invalid_argument("ill-colored term at " + gen_name(nd.gen));
        }
    }

    // input color word of a term (position k -> color of input k)
    std::vector<Color> input_colors(const GraphTerm& t) const
    {
        if (t.unit)
            return {t.unit_color};
        std::vector<Color> out(t.leaf_count(), Color::B);
        for (const auto& nd : t.nodes) {
            GenInfo gi = info(nd.gen);
            for (size_t i = 0; i < nd.slots.size(); ++i)
                if (nd.slots[i] < 0)
                    out[-nd.slots[i] - 1] = gi.ins[i];
        }
        return out;
    }

    Color output_color(const GraphTerm& t) const
    {
        return t.unit ? t.unit_color : info(t.nodes[0].gen).out;
    }

    // ----- the differential -------------------------------------------------

    const FormalSum& differential(GeneratorId g) const
    {
        auto key = std::make_pair(static_cast<int>(g.family), g.index);
        auto it = dcache_.find(key);
        if (it != dcache_.end())
            return it->second;
        FormalSum d = build_differential(g);
        return dcache_.emplace(key, std::move(d)).first->second;
    }

    // Leibniz expansion of the differential on a whole term: the sum over
    // vertices of the substituted differential, with the sign of the degrees
    // standing left of the expanded vertex in prefix order.
    void add_term_differential(FormalSum& out, const Rational& c, const GraphTerm& t) const
    {
        if (t.unit)
            return;
        auto deg_fn = [&](GeneratorId g) { return degree(g); };
        int left_degree = 0;
        for (int v = 0; v < t.vertex_count(); ++v) {
            const FormalSum& dv = differential(t.nodes[v].gen);
            for (const auto& [cv, tv] : dv.terms()) {
                auto [splice_sign, nt] = substitute_vertex(t, v, tv, deg_fn);
                auto [sgn, canon] = canonicalize(nt);
                out.add(c * cv * Rational(splice_sign) * sign_pow(left_degree) * sgn, canon);
            }
            left_degree += degree(t.nodes[v].gen);
        }
    }

    FormalSum sum_differential(const FormalSum& s) const
    {
        FormalSum out;
        for (const auto& [c, t] : s.terms())
            add_term_differential(out, c, t);
        out.prune();
        return out;
    }

  private:
    ModelId id_;
    mutable std::map<std::pair<int, int>, FormalSum> dcache_;

    int subtree_degree(const GraphTerm& t, int v) const
    {
        int d = degree(t.nodes[v].gen);
        for (int s : t.nodes[v].slots)
            if (s >= 0)
                d += subtree_degree(t, s);
        return d;
    }

    std::string subtree_key(const GraphTerm& t, int slot) const
    {
        if (slot < 0)
            return "L" + pad(-slot);
        const auto& nd = t.nodes[slot];
        std::string k = "(" + family_name(nd.gen.family) + pad(nd.gen.index);
        for (int s : nd.slots)
            k += " " + subtree_key(t, s);
        return k + ")";
    }
    static std::string pad(int v)
    {
        std::string s = std::to_string(v);
        return std::string(6 - s.size(), '0') + s;
    }

    void sort_children(GraphTerm& t, int v, Rational& sign) const
    {
        for (int s : t.nodes[v].slots)
            if (s >= 0)
                sort_children(t, s, sign);
        auto& slots = t.nodes[v].slots;
        size_t n = slots.size();
        std::vector<std::string> keys(n);
        std::vector<int> degs(n);
        for (size_t i = 0; i < n; ++i) {
            keys[i] = subtree_key(t, slots[i]);
            degs[i] = slots[i] < 0 ? 0 : subtree_degree(t, slots[i]);
        }
        // insertion sort, tracking the symmetry sign and the Koszul sign of
        // moving the subtree decorations past each other
        for (size_t i = 1; i < n; ++i) {
            size_t j = i;
            while (j > 0 && keys[j] < keys[j - 1]) {
                long long e = 1 + static_cast<long long>(degs[j]) * degs[j - 1];
                sign *= sign_pow(e);
                std::swap(keys[j], keys[j - 1]);
                std::swap(degs[j], degs[j - 1]);
                std::swap(slots[j], slots[j - 1]);
                --j;
            }
        }
    }

    // replaces the identity leaf numbering of `t` by sigma: leaf p receives
    // input sigma(p)
    static void relabel_leaves(GraphTerm& t, const Perm& sigma)
    {
        for (auto& nd : t.nodes)
            for (auto& s : nd.slots)
                if (s < 0)
                    s = -(sigma[-s - 1] + 1);
    }

    void add_canonical(FormalSum& d, const Rational& c, const GraphTerm& t) const
    {
        auto [sgn, canon] = canonicalize(t);
        d.add(c * sgn, canon);
    }

    FormalSum build_differential(GeneratorId g) const
    {
        if (!valid(g))
            throw std::invalid_argument("differential of invalid generator " + gen_name(g));
        switch (id_) {
        case ModelId::AssocMorphism: return build_assoc(g);
        case ModelId::LieMorphism: return build_lie(g);
        default: return build_iso(g);
        }
    }

    FormalSum build_assoc(GeneratorId g) const
    {
        FormalSum d;
        int n = g.index;
        if (g.family == GenFamily::Mu || g.family == GenFamily::Nu) {
            for (int i = 2; i <= n - 1; ++i) {
                int j = n + 1 - i;
                for (int s = 0; s <= n - j; ++s) {
                    Rational c = sign_pow(i + static_cast<long long>(s) * (j + 1));
                    GraphTerm t = graft(corolla({g.family, i}, i), s + 1,
                                        corolla({g.family, j}, j));
                    add_canonical(d, c, t);
                }
            }
            d.prune();
            return d;
        }
        // f_n
        for (int l = 2; l <= n; ++l)
            for_each_composition(n, l, [&](const std::vector<int>& r) {
                long long e = 0;
                for (size_t i = 0; i < r.size(); ++i)
                    for (size_t j = i + 1; j < r.size(); ++j)
                        e += static_cast<long long>(r[i]) * (r[j] + 1);
                GraphTerm t = corolla({GenFamily::Nu, l}, l);
                int pos = 1;
                for (int ri : r) {
                    t = graft(t, pos, corolla({GenFamily::F, ri}, ri));
                    pos += ri;
                }
                add_canonical(d, Rational(-1) * sign_pow(e), t);
            });
        for (int i = 1; i <= n - 1; ++i) {
            int j = n + 1 - i;
            for (int s = 0; s <= n - j; ++s) {
                Rational c = Rational(-1) * sign_pow(i + static_cast<long long>(s) * (j + 1));
                GraphTerm t =
                    graft(corolla({GenFamily::F, i}, i), s + 1, corolla({GenFamily::Mu, j}, j));
                add_canonical(d, c, t);
            }
        }
        d.prune();
        return d;
    }

    FormalSum build_lie(GeneratorId g) const
    {
        FormalSum d;
        int n = g.index;
        if (g.family == GenFamily::Mu || g.family == GenFamily::Nu) {
            for (int i = 2; i <= n - 1; ++i) {
                int j = n + 1 - i;
                Rational base = sign_pow(static_cast<long long>(j) * (i - 1));
                for (const auto& su : enumerate_unshuffles(j, i - 1)) {
                    GraphTerm t =
                        graft(corolla({g.family, i}, i), 1, corolla({g.family, j}, j));
                    relabel_leaves(t, su.perm);
                    add_canonical(d, base * Rational(su.sign), t);
                }
            }
            d.prune();
            return d;
        }
        // f_n: block-unshuffled corollas plus chain terms
        for (int l = 2; l <= n; ++l)
            for_each_sorted_composition(n, l, [&](const std::vector<int>& r) {
                long long e = static_cast<long long>(l) * (l - 1) / 2;
                for (int i = 0; i < l - 1; ++i)
                    e += static_cast<long long>(r[i]) * (l - 1 - i);
                Rational base = sign_pow(e);
                for (const auto& su : enumerate_block_unshuffles(r)) {
                    GraphTerm t = corolla({GenFamily::Nu, l}, l);
                    int pos = 1;
                    for (int ri : r) {
                        t = graft(t, pos, corolla({GenFamily::F, ri}, ri));
                        pos += ri;
                    }
                    relabel_leaves(t, su.perm);
                    add_canonical(d, base * Rational(su.sign), t);
                }
            });
        for (int i = 1; i <= n - 1; ++i) {
            int j = n + 1 - i;
            Rational base = Rational(-1) * sign_pow(static_cast<long long>(j) * (i - 1));
            for (const auto& su : enumerate_unshuffles(j, i - 1)) {
                GraphTerm t =
                    graft(corolla({GenFamily::F, i}, i), 1, corolla({GenFamily::Mu, j}, j));
                relabel_leaves(t, su.perm);
                add_canonical(d, base * Rational(su.sign), t);
            }
        }
        d.prune();
        return d;
    }

    FormalSum build_iso(GeneratorId g) const
    {
        FormalSum d;
        int n = g.index;
        bool isf = g.family == GenFamily::F;
        auto chain = [&](GeneratorId top, GeneratorId bot) {
            return graft(corolla(top, 1), 1, corolla(bot, 1));
        };
        GenFamily self = isf ? GenFamily::F : GenFamily::G;
        GenFamily other = isf ? GenFamily::G : GenFamily::F;
        if (n == 0)
            return d;
        if (n == 1) {
            // d f_1 = g_0 f_0 - 1_B  (and the mirrored formula for g_1)
            d.add(Rational(1), chain({other, 0}, {self, 0}));
            d.add(Rational(-1), GraphTerm::make_unit(isf ? Color::B : Color::W));
            return d;
        }
        if (n % 2 == 0) {
            int m = n / 2;
            for (int i = 0; i < m; ++i) {
                d.add(Rational(1), chain({self, 2 * i}, {self, 2 * (m - i) - 1}));
                d.add(Rational(-1), chain({other, 2 * (m - i) - 1}, {self, 2 * i}));
            }
        }
        else {
            int m = (n - 1) / 2;
            for (int j = 0; j <= m; ++j)
                d.add(Rational(1), chain({other, 2 * j}, {self, 2 * (m - j)}));
            for (int j = 0; j < m; ++j)
                d.add(Rational(-1), chain({self, 2 * j + 1}, {self, 2 * (m - j) - 1}));
        }
        d.prune();
        return d;
    }

    template <class F> static void for_each_composition(int n, int l, F&& f)
    {
        std::vector<int> r(l, 1);
        auto rec = [&](auto&& self, int pos, int rest) -> void {
            if (pos == l - 1) {
                if (rest >= 1) {
                    r[pos] = rest;
                    f(r);
                }
                return;
            }
            for (int v = 1; v <= rest - (l - pos - 1); ++v) {
                r[pos] = v;
                self(self, pos + 1, rest - v);
            }
        };
        rec(rec, 0, n);
    }

    template <class F> static void for_each_sorted_composition(int n, int l, F&& f)
    {
        std::vector<int> r(l, 1);
        auto rec = [&](auto&& self, int pos, int rest, int minv) -> void {
            if (pos == l - 1) {
                if (rest >= minv) {
                    r[pos] = rest;
                    f(r);
                }
                return;
            }
            for (int v = minv; v * (l - pos) <= rest; ++v) {
                r[pos] = v;
                self(self, pos + 1, rest - v, v);
            }
        };
        rec(rec, 0, n, 1);
    }
};

inline const ModelTable& model_table(ModelId id)
{
    static ModelTable assoc(ModelId::AssocMorphism);
    static ModelTable lie(ModelId::LieMorphism);
    static ModelTable iso(ModelId::Iso);
    switch (id) {
    case ModelId::AssocMorphism: return assoc;
    case ModelId::LieMorphism: return lie;
    default: return iso;
    }
}

} // namespace defc
