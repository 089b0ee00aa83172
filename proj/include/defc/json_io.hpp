#pragma once

#include <json.hpp>

#include "defc/algebra.hpp"
#include "defc/classical.hpp"
#include "defc/model.hpp"

namespace defc {

using nlohmann::json;

// tensors are emitted output-major as nested arrays of exact rationals
inline json multimap_to_json(const MultiMap& m)
{
    std::vector<int> dims;
    dims.push_back(m.out_dim());
    for (int d : m.in_dims())
        dims.push_back(d);
    size_t flat = 0;
    std::function<json(size_t)> build = [&](size_t level) -> json {
        json arr = json::array();
        if (level + 1 == dims.size()) {
            for (int i = 0; i < dims[level]; ++i)
                arr.push_back(m.coeffs()[flat++].str());
            return arr;
        }
        for (int i = 0; i < dims[level]; ++i)
            arr.push_back(build(level + 1));
        return arr;
    };
    if (dims.size() == 1) {
        json arr = json::array();
        for (const auto& c : m.coeffs())
            arr.push_back(c.str());
        return arr;
    }
    return build(0);
}

inline Rational rational_from_json(const json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    throw std::invalid_argument("expected an exact rational (integer or \"p/q\" string)");
}

inline MultiMap multimap_from_json(const json& j, const Spaces& sp, Color out,
                                   const std::vector<Color>& in)
{
    MultiMap m = MultiMap::zero(sp, out, in);
    std::vector<int> dims;
    dims.push_back(m.out_dim());
    for (int d : m.in_dims())
        dims.push_back(d);
    size_t flat = 0;
    std::function<void(const json&, size_t)> read = [&](const json& arr, size_t level) {
        if (!arr.is_array() || arr.size() != static_cast<size_t>(dims[level]))
            throw std::invalid_argument("tensor extent mismatch at level " +
                                        std::to_string(level));
        for (const auto& e : arr) {
            if (level + 1 == dims.size())
                m.coeffs()[flat++] = rational_from_json(e);
            else
                read(e, level + 1);
        }
    };
    read(j, 0);
    return m;
}

inline json algebra_to_json(const AlgebraInstance& a)
{
    json j;
    j["model"] = model_name(a.model);
    j["spaces"] = {{"U", {{"dim", a.spaces.B.dim}}}, {"V", {{"dim", a.spaces.W.dim}}}};
    json st;
    for (const auto& [name, m] : a.structure)
        st[name] = multimap_to_json(m);
    j["structure"] = st;
    return j;
}

inline AlgebraInstance algebra_from_json(const json& j)
{
    AlgebraInstance a;
    a.model = parse_model(j.at("model").get<std::string>());
    int dimU = j.at("spaces").at("U").at("dim").get<int>();
    int dimV = j.at("spaces").at("V").at("dim").get<int>();
    if (dimU < 1 || dimV < 1)
        throw std::invalid_argument("space dims must be >= 1");
    a.spaces = Spaces(dimU, dimV);
    const json& st = j.at("structure");
    const ModelTable& tbl = model_table(a.model);
    for (GeneratorId g : tbl.beta_supported()) {
        GenInfo gi = tbl.info(g);
        std::string name;
        if (a.model == ModelId::Iso)
            name = g.family == GenFamily::F ? "F" : "G";
        else
            name = g.family == GenFamily::Mu ? "mu_U"
                                             : (g.family == GenFamily::Nu ? "mu_V" : "g");
        a.structure.emplace(name, multimap_from_json(st.at(name), a.spaces, gi.out, gi.ins));
    }
    a.check_shapes();
    return a;
}

inline json cochain_to_json(const Cochain& c)
{
    json j;
    j["model"] = model_name(c.model);
    j["degree"] = c.degree;
    json vals(json::value_t::object);
    for (const auto& [g, m] : c.values)
        vals[gen_name(g)] = multimap_to_json(m);
    j["values"] = vals;
    return j;
}

// Gerstenhaber-Schack / S-complex elements reuse the cochain format with the
// component keys x_U, x_V, x_g.
inline json gs_cochain_to_json(const GSCochain& x)
{
    json j;
    j["degree"] = x.n;
    j["values"] = {{"x_U", multimap_to_json(x.x_U)},
                   {"x_V", multimap_to_json(x.x_V)},
                   {"x_g", multimap_to_json(x.x_g)}};
    return j;
}

inline GSCochain gs_cochain_from_json(const json& j, const Spaces& sp)
{
    GSCochain x;
    x.n = j.at("degree").get<int>();
    if (x.n < 1)
        throw std::invalid_argument("gs cochain: degree must be >= 1");
    const json& vals = j.at("values");
    x.x_U = multimap_from_json(vals.at("x_U"), sp, Color::B,
                               std::vector<Color>(x.n, Color::B));
    x.x_V = multimap_from_json(vals.at("x_V"), sp, Color::W,
                               std::vector<Color>(x.n, Color::W));
    x.x_g = multimap_from_json(vals.at("x_g"), sp, Color::W,
                               std::vector<Color>(x.n - 1, Color::B));
    return x;
}

inline Cochain cochain_from_json(const json& j, const Spaces& sp)
{
    Cochain c;
    c.model = parse_model(j.at("model").get<std::string>());
    c.degree = j.at("degree").get<int>();
    const ModelTable& tbl = model_table(c.model);
    if (j.contains("values"))
        for (const auto& [name, tensor] : j.at("values").items()) {
            GeneratorId g = parse_gen(name);
            GenInfo gi = tbl.info(g);
            if (gi.degree != c.degree - 1)
                throw std::invalid_argument("generator " + name +
                                            " has the wrong internal degree for a cochain "
                                            "of degree " +
                                            std::to_string(c.degree));
            c.set(g, multimap_from_json(tensor, sp, gi.out, gi.ins));
        }
    return c;
}

} // namespace defc
