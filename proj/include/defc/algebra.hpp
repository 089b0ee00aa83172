#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "defc/model.hpp"
#include "defc/multimap.hpp"

namespace defc {

// A 2-colored algebra instance: the based spaces and the structure maps the
// augmentation beta sends the degree-zero generators to.
//   assoc/lie morphism: mu_U, mu_V, g      iso: F, G
struct AlgebraInstance {
    ModelId model = ModelId::AssocMorphism;
    Spaces spaces;
    std::map<std::string, MultiMap> structure;

    const MultiMap& map(const std::string& name) const
    {
        auto it = structure.find(name);
        if (it == structure.end())
            throw std::invalid_argument("algebra instance: missing structure map " + name);
        return it->second;
    }

    // image of a generator under the augmentation-to-algebra map; zero on
    // generators of positive internal degree
    MultiMap beta(GeneratorId g) const
    {
        const ModelTable& tbl = model_table(model);
        GenInfo gi = tbl.info(g);
        if (gi.degree != 0)
            return MultiMap::zero(spaces, gi.out, gi.ins);
        if (model == ModelId::Iso)
            return g.family == GenFamily::F ? map("F") : map("G");
        switch (g.family) {
        case GenFamily::Mu: return map("mu_U");
        case GenFamily::Nu: return map("mu_V");
        default: return map("g");
        }
    }

    void check_shapes() const
    {
        const ModelTable& tbl = model_table(model);
        for (GeneratorId g : tbl.beta_supported()) {
            MultiMap m = beta(g);
            GenInfo gi = tbl.info(g);
            MultiMap want = MultiMap::zero(spaces, gi.out, gi.ins);
            if (!m.same_signature(want))
                throw std::invalid_argument("algebra instance: bad shape for " + gen_name(g));
        }
    }
};

inline AlgebraInstance make_assoc_instance(ModelId model, const Spaces& sp, MultiMap mu_U,
                                           MultiMap mu_V, MultiMap g)
{
    AlgebraInstance a;
    a.model = model;
    a.spaces = sp;
    a.structure.emplace("mu_U", std::move(mu_U));
    a.structure.emplace("mu_V", std::move(mu_V));
    a.structure.emplace("g", std::move(g));
    a.check_shapes();
    return a;
}

inline AlgebraInstance make_iso_instance(const Spaces& sp, MultiMap F, MultiMap G)
{
    AlgebraInstance a;
    a.model = ModelId::Iso;
    a.spaces = sp;
    a.structure.emplace("F", std::move(F));
    a.structure.emplace("G", std::move(G));
    a.check_shapes();
    return a;
}

struct AxiomResidual {
    std::string axiom;
    GeneratorId generator;
    MultiMap residual;
    bool holds;
};

struct ValidationReport {
    bool ok = true;
    std::vector<AxiomResidual> axioms;
};

// Evaluates the differential of each axiom generator under beta.  The
// residual is the exact failure of the corresponding axiom; everything
// vanishes precisely for genuine algebra instances.
inline ValidationReport validate_algebra(const AlgebraInstance& a)
{
    const ModelTable& tbl = model_table(a.model);
    a.check_shapes();
    ValidationReport rep;
    auto beta_fn = [&](GeneratorId g) { return a.beta(g); };

    if (a.model == ModelId::LieMorphism) {
        for (const char* name : {"mu_U", "mu_V"}) {
            const MultiMap& m = a.map(name);
            bool alt = m.is_alternating();
            MultiMap skew_res = m + apply_permutation(m, {1, 0});
            rep.axioms.push_back(
                {std::string(name) + " skew-symmetric", {GenFamily::Mu, 2}, skew_res, alt});
            rep.ok = rep.ok && alt;
        }
    }

    for (GeneratorId g : tbl.axiom_generators()) {
        const FormalSum& d = tbl.differential(g);
        GenInfo gi = tbl.info(g);
        MultiMap res = MultiMap::zero(a.spaces, gi.out, gi.ins);
        for (const auto& [c, t] : d.terms())
            res += c * graph_evaluate(t, beta_fn, a.spaces);
        bool holds = res.is_zero();
        std::string axiom;
        if (a.model == ModelId::Iso)
            axiom = g.family == GenFamily::F ? "G F = 1" : "F G = 1";
        else if (g.family == GenFamily::Mu)
            axiom = a.model == ModelId::AssocMorphism ? "mu_U associative" : "mu_U Jacobi";
        else if (g.family == GenFamily::Nu)
            axiom = a.model == ModelId::AssocMorphism ? "mu_V associative" : "mu_V Jacobi";
        else
            axiom = "g is a morphism";
        rep.axioms.push_back({axiom, g, res, holds});
        rep.ok = rep.ok && holds;
    }
    return rep;
}

// An element of the deformation complex: a finite association from the
// generators of internal degree (degree-1) to multilinear maps.  Missing keys
// are zero.
struct Cochain {
    ModelId model = ModelId::AssocMorphism;
    int degree = 0;
    std::map<GeneratorId, MultiMap> values;

    bool is_zero() const
    {
        for (const auto& [g, m] : values)
            if (!m.is_zero())
                return false;
        return true;
    }

    bool supports(GeneratorId g) const
    {
        auto it = values.find(g);
        return it != values.end() && !it->second.is_zero();
    }

    MultiMap value(GeneratorId g, const Spaces& sp) const
    {
        auto it = values.find(g);
        if (it != values.end())
            return it->second;
        GenInfo gi = model_table(model).info(g);
        return MultiMap::zero(sp, gi.out, gi.ins);
    }

    void set(GeneratorId g, MultiMap m)
    {
        GenInfo gi = model_table(model).info(g);
        if (gi.degree != degree - 1)
            throw std::invalid_argument("cochain of degree " + std::to_string(degree) +
                                        " cannot be supported on " + gen_name(g));
        if (gi.skew && !m.is_alternating())
            throw std::invalid_argument("cochain value on " + gen_name(g) +
                                        " must be alternating");
        values.insert_or_assign(g, std::move(m));
    }

    Cochain& operator+=(const Cochain& o)
    {
        if (model != o.model || degree != o.degree)
            throw std::invalid_argument("cochain sum: degree/model mismatch");
        for (const auto& [g, m] : o.values) {
            auto it = values.find(g);
            if (it == values.end())
                values.emplace(g, m);
            else
                it->second += m;
        }
        return *this;
    }

    friend Cochain operator*(const Rational& c, Cochain x)
    {
        for (auto& [g, m] : x.values)
            m = c * m;
        return x;
    }

    friend bool operator==(const Cochain& a, const Cochain& b)
    {
        if (a.model != b.model || a.degree != b.degree)
            return false;
        Cochain diff = a;
        diff += Rational(-1) * b;
        return diff.is_zero();
    }
};

inline Cochain zero_cochain(ModelId model, int degree)
{
    Cochain c;
    c.model = model;
    c.degree = degree;
    return c;
}

} // namespace defc
