#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "defc/multimap.hpp"
#include "defc/perm.hpp"
#include "defc/rational.hpp"

namespace defc {

enum class GenFamily : uint8_t { Mu = 0, Nu = 1, F = 2, G = 3 };

struct GeneratorId {
    GenFamily family;
    int index; // arity index: mu_3 -> {Mu,3}; degree index for the iso model

    friend bool operator==(const GeneratorId& a, const GeneratorId& b)
    {
        return a.family == b.family && a.index == b.index;
    }
    friend bool operator<(const GeneratorId& a, const GeneratorId& b)
    {
        if (a.family != b.family)
            return a.family < b.family;
        return a.index < b.index;
    }
};

inline std::string family_name(GenFamily f)
{
    switch (f) {
    case GenFamily::Mu: return "mu";
    case GenFamily::Nu: return "nu";
    case GenFamily::F: return "f";
    default: return "g";
    }
}

inline std::string gen_name(GeneratorId g)
{
    return family_name(g.family) + "_" + std::to_string(g.index);
}

inline GeneratorId parse_gen(const std::string& s)
{
    auto us = s.find('_');
    if (us == std::string::npos)
        throw std::invalid_argument("bad generator name: " + s);
    std::string fam = s.substr(0, us);
    int idx = std::stoi(s.substr(us + 1));
    if (fam == "mu")
        return {GenFamily::Mu, idx};
    if (fam == "nu")
        return {GenFamily::Nu, idx};
    if (fam == "f")
        return {GenFamily::F, idx};
    if (fam == "g")
        return {GenFamily::G, idx};
    throw std::invalid_argument("bad generator family: " + fam);
}

// A rooted-tree monomial in the free colored PROP: vertices decorated by
// generators, plus a distinguished unit term 1_c.  Nodes are kept in DFS
// prefix order (root first, children left to right).  A slot entry >= 0 is a
// child node index; a slot entry < 0 encodes a leaf receiving input -slot
// (inputs are numbered from 1).  The leaf permutation is the DFS sequence of
// leaf inputs.
struct GraphTerm {
    struct Node {
        GeneratorId gen;
        std::vector<int> slots;
    };

    bool unit = false;
    Color unit_color = Color::B;
    std::vector<Node> nodes;

    static GraphTerm make_unit(Color c)
    {
        GraphTerm t;
        t.unit = true;
        t.unit_color = c;
        return t;
    }

    int vertex_count() const { return unit ? 0 : static_cast<int>(nodes.size()); }

    int leaf_count() const
    {
        if (unit)
            return 1;
        int n = 0;
        for (const auto& nd : nodes)
            for (int s : nd.slots)
                if (s < 0)
                    ++n;
        return n;
    }

    // DFS sequence of leaf inputs (1-based); equals the leaf permutation
    std::vector<int> leaf_inputs() const
    {
        std::vector<int> out;
        if (unit) {
            out.push_back(1);
            return out;
        }
        dfs_leaves(0, out);
        return out;
    }

    bool operator==(const GraphTerm& o) const
    {
        if (unit != o.unit)
            return false;
        if (unit)
            return unit_color == o.unit_color;
        if (nodes.size() != o.nodes.size())
            return false;
        for (size_t i = 0; i < nodes.size(); ++i)
            if (!(nodes[i].gen == o.nodes[i].gen) || nodes[i].slots != o.nodes[i].slots)
                return false;
        return true;
    }

    // structural key used for merging terms in formal sums
    std::string key() const
    {
        if (unit)
            return "U" + color_name(unit_color);
        std::string k;
        for (const auto& nd : nodes) {
            k += gen_name(nd.gen);
            k += '[';
            for (int s : nd.slots) {
                k += std::to_string(s);
                k += ',';
            }
            k += ']';
        }
        return k;
    }

    // Rebuilds the node array in DFS prefix order (after surgery).
    void normalize_order() { root_rebuild(0); }

    // same, with an explicit root; unreachable nodes are dropped
    void root_rebuild(int root)
    {
        if (unit || nodes.empty())
            return;
        std::vector<Node> out;
        out.reserve(nodes.size());
        rebuild(root, out);
        nodes = std::move(out);
    }

  private:
    void dfs_leaves(int v, std::vector<int>& out) const
    {
        for (int s : nodes[v].slots) {
            if (s < 0)
                out.push_back(-s);
            else
                dfs_leaves(s, out);
        }
    }
    int rebuild(int v, std::vector<Node>& out) const
    {
        int my = static_cast<int>(out.size());
        out.push_back(nodes[v]);
        for (auto& s : out[my].slots) {
            int old = s;
            if (old >= 0)
                s = rebuild(old, out);
        }
        return my;
    }
};

// single-vertex corolla with inputs 1..n in order
inline GraphTerm corolla(GeneratorId gen, int arity)
{
    GraphTerm t;
    GraphTerm::Node nd;
    nd.gen = gen;
    for (int i = 1; i <= arity; ++i)
        nd.slots.push_back(-i);
    t.nodes.push_back(nd);
    return t;
}

// Grafts `inner` (arity m) into input position s (1-based) of `outer`:
// the tree form of outer o_s inner.  Inner's inputs become inputs
// s..s+m-1, later outer inputs shift up.
inline GraphTerm graft(const GraphTerm& outer, int s, const GraphTerm& inner)
{
    if (outer.unit)
        return inner;
    int m = inner.leaf_count();
    GraphTerm r;
    if (inner.unit) {
        // splicing the unit just renumbers nothing
        r = outer;
        return r;
    }
    r.nodes = outer.nodes;
    int off = static_cast<int>(r.nodes.size());
    // renumber outer leaves: inputs > s shift by m-1; input s becomes the graft point
    int graft_node = -1, graft_slot = -1;
    for (size_t v = 0; v < r.nodes.size(); ++v)
        for (size_t j = 0; j < r.nodes[v].slots.size(); ++j) {
            int& sl = r.nodes[v].slots[j];
            if (sl < 0) {
                int inp = -sl;
                if (inp == s) {
                    graft_node = static_cast<int>(v);
                    graft_slot = static_cast<int>(j);
                }
                else if (inp > s)
                    sl = -(inp + m - 1);
            }
        }
    if (graft_node < 0)
        throw std::invalid_argument("graft: input position not found");
    for (const auto& nd : inner.nodes) {
        GraphTerm::Node copy = nd;
        for (auto& sl : copy.slots) {
            if (sl >= 0)
                sl += off;
            else
                sl = -(-sl + s - 1); // inner input k -> outer input s+k-1
        }
        r.nodes.push_back(copy);
    }
    r.nodes[graft_node].slots[graft_slot] = off;
    r.normalize_order();
    return r;
}

// Replaces vertex v of `host` by the term `repl` (matching arity): a leaf of
// repl receiving input k is attached to what occupied slot k of v, and the
// unit splices the vertex away.  The replacement block enters the tensor word
// of decorations at v's position; the returned sign is the Koszul cost of
// reordering that word into the prefix order of the new tree, computed from
// the generator degrees.
inline std::pair<int, GraphTerm> substitute_vertex(const GraphTerm& host, int v,
                                                   const GraphTerm& repl,
                                                   const std::function<int(GeneratorId)>& deg)
{
    const auto& vnode = host.nodes[v];
    int l = static_cast<int>(vnode.slots.size());
    int V = static_cast<int>(host.nodes.size());
    GraphTerm r;

    if (repl.unit) {
        if (l != 1)
            throw std::invalid_argument("substitute_vertex: unit into arity != 1");
        int child = vnode.slots[0];
        if (V == 1)
            return {1, GraphTerm::make_unit(repl.unit_color)};
        if (v == 0 && child < 0)
            throw std::invalid_argument("substitute_vertex: malformed host tree");
        // drop v; remaining vertices keep their relative order, so no sign
        auto remap = [&](int u) { return u < v ? u : u - 1; };
        for (int u = 0; u < V; ++u) {
            if (u == v)
                continue;
            GraphTerm::Node copy = host.nodes[u];
            for (auto& sl : copy.slots) {
                if (sl == v)
                    sl = child < 0 ? child : remap(child);
                else if (sl >= 0)
                    sl = remap(sl);
            }
            r.nodes.push_back(copy);
        }
        r.root_rebuild(v == 0 ? remap(child) : 0);
        return {1, r};
    }

    if (repl.leaf_count() != l)
        throw std::invalid_argument("substitute_vertex: arity mismatch");
    int R = static_cast<int>(repl.nodes.size());
    auto remap = [&](int u) { return u < v ? u : u + R - 1; };
    for (int u = 0; u < V; ++u) {
        if (u == v) {
            for (const auto& nd : repl.nodes) {
                GraphTerm::Node copy = nd;
                for (auto& sl : copy.slots) {
                    if (sl >= 0)
                        sl += v;
                    else {
                        int k = -sl; // repl leaf receiving input k -> slot k of v
                        int target = vnode.slots[k - 1];
                        sl = target >= 0 ? remap(target) : target;
                    }
                }
                r.nodes.push_back(copy);
            }
        }
        else {
            GraphTerm::Node copy = host.nodes[u];
            for (auto& sl : copy.slots)
                if (sl >= 0)
                    sl = sl == v ? v : remap(sl);
            r.nodes.push_back(copy);
        }
    }
    // Koszul sign of passing from the spliced order (the arena order built
    // above) to prefix order
    std::vector<int> prefix;
    prefix.reserve(r.nodes.size());
    std::function<void(int)> dfs = [&](int u) {
        prefix.push_back(u);
        for (int sl : r.nodes[u].slots)
            if (sl >= 0)
                dfs(sl);
    };
    dfs(0);
    long long e = 0;
    for (size_t i = 0; i < prefix.size(); ++i)
        for (size_t j = i + 1; j < prefix.size(); ++j)
            if (prefix[i] > prefix[j])
                e += static_cast<long long>(deg(r.nodes[prefix[i]].gen)) *
                     deg(r.nodes[prefix[j]].gen);
    r.root_rebuild(0);
    return {e % 2 ? -1 : 1, r};
}

// A rational-weighted formal sum of graph terms.  Terms are kept canonical
// and merged by structural key; zero coefficients are dropped.
class FormalSum {
  public:
    const std::vector<std::pair<Rational, GraphTerm>>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    // expects `t` to be canonical already (see ModelTable::canonicalize)
    void add(const Rational& c, const GraphTerm& t)
    {
        if (c.is_zero())
            return;
        std::string k = t.key();
        auto it = index_.find(k);
        if (it == index_.end()) {
            index_[k] = terms_.size();
            terms_.emplace_back(c, t);
        }
        else {
            terms_[it->second].first += c;
        }
    }

    void prune()
    {
        std::vector<std::pair<Rational, GraphTerm>> keep;
        index_.clear();
        for (auto& [c, t] : terms_)
            if (!c.is_zero()) {
                index_[t.key()] = keep.size();
                keep.emplace_back(c, t);
            }
        terms_ = std::move(keep);
    }

  private:
    std::vector<std::pair<Rational, GraphTerm>> terms_;
    std::map<std::string, size_t> index_;
};

// Evaluates a term in End_T: composes the decorations along the tree and
// precomposes with the leaf permutation.  `decorate` must return a map of the
// generator's biarity for every vertex, and may depend on the vertex index.
inline MultiMap graph_evaluate_v(const GraphTerm& t,
                                 const std::function<MultiMap(int, GeneratorId)>& decorate,
                                 const Spaces& sp)
{
    if (t.unit)
        return MultiMap::identity(sp, t.unit_color);

    std::function<MultiMap(int)> eval = [&](int v) -> MultiMap {
        const auto& nd = t.nodes[v];
        MultiMap r = decorate(v, nd.gen);
        if (r.arity() != static_cast<int>(nd.slots.size()))
            throw std::invalid_argument("graph_evaluate: decoration arity mismatch at " +
                                        gen_name(nd.gen));
        for (int i = static_cast<int>(nd.slots.size()); i >= 1; --i) {
            int sl = nd.slots[i - 1];
            if (sl >= 0)
                r = compose_at(r, i, eval(sl));
        }
        return r;
    };
    MultiMap planar = eval(0);
    std::vector<int> li = t.leaf_inputs();
    Perm sigma(li.size());
    for (size_t i = 0; i < li.size(); ++i)
        sigma[i] = li[i] - 1;
    return apply_permutation(planar, sigma);
}

inline MultiMap graph_evaluate(const GraphTerm& t,
                               const std::function<MultiMap(GeneratorId)>& decorate,
                               const Spaces& sp)
{
    return graph_evaluate_v(
        t, [&](int, GeneratorId g) { return decorate(g); }, sp);
}

// s-expression rendering, one term per sum line: coefficient, tree, and the
// leaf permutation when it is not the identity.
inline std::string term_to_sexpr(const GraphTerm& t)
{
    if (t.unit)
        return "(unit " + color_name(t.unit_color) + ")";
    std::function<std::string(int)> render = [&](int v) -> std::string {
        const auto& nd = t.nodes[v];
        std::string gen = "(" + family_name(nd.gen.family) + " " +
                          std::to_string(nd.gen.index) + ")";
        bool all_leaves = true;
        for (int s : nd.slots)
            if (s >= 0)
                all_leaves = false;
        if (all_leaves)
            return gen;
        std::string out = "(compose " + gen;
        for (int s : nd.slots) {
            out += ' ';
            out += s < 0 ? std::string("_") : render(s);
        }
        out += ')';
        return out;
    };
    std::string out = render(0);
    std::vector<int> li = t.leaf_inputs();
    bool id = true;
    for (size_t i = 0; i < li.size(); ++i)
        if (li[i] != static_cast<int>(i) + 1)
            id = false;
    if (!id) {
        out += " (perm";
        for (int k : li)
            out += ' ' + std::to_string(k);
        out += ')';
    }
    return out;
}

inline std::string sum_to_sexpr(const FormalSum& s)
{
    if (s.empty())
        return "0\n";
    std::string out;
    for (const auto& [c, t] : s.terms()) {
        out += c.str();
        out += ' ';
        out += term_to_sexpr(t);
        out += '\n';
    }
    return out;
}

} // namespace defc
