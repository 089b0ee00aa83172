#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "defc/perm.hpp"
#include "defc/rational.hpp"

namespace defc {

// The two colors of the models treated here.  B is the source color (space U),
// W the target color (space V).
enum class Color : uint8_t { B = 0, W = 1 };

inline std::string color_name(Color c) { return c == Color::B ? "B" : "W"; }

struct ColorSpace {
    Color color = Color::B;
    int dim = 1;
    std::vector<std::string> basis; // optional labels, defaults e0,e1,...

    ColorSpace() = default;
    ColorSpace(Color c, int d) : color(c), dim(d)
    {
        if (d < 1)
            throw std::invalid_argument("ColorSpace: dim must be >= 1");
        for (int i = 0; i < d; ++i)
            basis.push_back("e" + std::to_string(i));
    }
};

// The based spaces of a 2-colored algebra instance.
struct Spaces {
    ColorSpace B; // "U"
    ColorSpace W; // "V"
    Spaces() : B(Color::B, 1), W(Color::W, 1) {}
    Spaces(int dimU, int dimV) : B(Color::B, dimU), W(Color::W, dimV) {}
    const ColorSpace& at(Color c) const { return c == Color::B ? B : W; }
    int dim(Color c) const { return at(c).dim; }
};

// A colored multilinear map T_{c_1} x ... x T_{c_n} -> T_{out}, stored as a
// dense rational tensor with the output index outermost and the last input
// fastest:  coeffs[((o*d_1 + i_1)*d_2 + i_2)...].
class MultiMap {
  public:
    MultiMap() = default;
    MultiMap(Color out_color, int out_dim, std::vector<Color> in_colors,
             std::vector<int> in_dims)
        : out_color_(out_color),
          out_dim_(out_dim),
          in_colors_(std::move(in_colors)),
          in_dims_(std::move(in_dims))
    {
        if (in_colors_.size() != in_dims_.size())
            throw std::invalid_argument("MultiMap: color/dim arity mismatch");
        coeffs_.assign(flat_size(), Rational(0));
    }

    static MultiMap zero(const Spaces& sp, Color out, const std::vector<Color>& in)
    {
        std::vector<int> dims;
        for (Color c : in)
            dims.push_back(sp.dim(c));
        return MultiMap(out, sp.dim(out), in, dims);
    }

    static MultiMap identity(const Spaces& sp, Color c)
    {
        MultiMap m = zero(sp, c, {c});
        for (int i = 0; i < sp.dim(c); ++i)
            m.at({i, {i}}) = Rational(1);
        return m;
    }

    int arity() const { return static_cast<int>(in_colors_.size()); }
    Color out_color() const { return out_color_; }
    const std::vector<Color>& in_colors() const { return in_colors_; }
    int out_dim() const { return out_dim_; }
    const std::vector<int>& in_dims() const { return in_dims_; }

    struct Index {
        int out;
        std::vector<int> in;
    };

    Rational& at(const Index& ix) { return coeffs_[flatten(ix)]; }
    const Rational& at(const Index& ix) const { return coeffs_[flatten(ix)]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    std::vector<Rational>& coeffs() { return coeffs_; }

    bool is_zero() const
    {
        for (const auto& c : coeffs_)
            if (!c.is_zero())
                return false;
        return true;
    }

    bool same_signature(const MultiMap& o) const
    {
        return out_color_ == o.out_color_ && out_dim_ == o.out_dim_ &&
               in_colors_ == o.in_colors_ && in_dims_ == o.in_dims_;
    }

    friend bool operator==(const MultiMap& a, const MultiMap& b)
    {
        return a.same_signature(b) && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const MultiMap& a, const MultiMap& b) { return !(a == b); }

    MultiMap& operator+=(const MultiMap& o)
    {
        require_same(o, "operator+=");
        for (size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    friend MultiMap operator+(MultiMap a, const MultiMap& b) { return a += b; }
    friend MultiMap operator-(const MultiMap& a, const MultiMap& b)
    {
        return a + (Rational(-1) * b);
    }
    friend MultiMap operator*(const Rational& c, MultiMap m)
    {
        for (auto& x : m.coeffs_)
            x *= c;
        return m;
    }

    // f composed with g plugged into input s (1-based):
    //   f o_s g = f(1^{s-1} (x) g (x) 1^{arity(f)-s})
    friend MultiMap compose_at(const MultiMap& f, int s, const MultiMap& g)
    {
        if (s < 1 || s > f.arity())
            throw std::invalid_argument("compose_at: position out of range");
        if (f.in_colors_[s - 1] != g.out_color_ || f.in_dims_[s - 1] != g.out_dim_)
            throw std::invalid_argument("compose_at: color mismatch at position " +
                                        std::to_string(s));
        std::vector<Color> in_colors;
        std::vector<int> in_dims;
        for (int i = 0; i < s - 1; ++i) {
            in_colors.push_back(f.in_colors_[i]);
            in_dims.push_back(f.in_dims_[i]);
        }
        for (int i = 0; i < g.arity(); ++i) {
            in_colors.push_back(g.in_colors_[i]);
            in_dims.push_back(g.in_dims_[i]);
        }
        for (int i = s; i < f.arity(); ++i) {
            in_colors.push_back(f.in_colors_[i]);
            in_dims.push_back(f.in_dims_[i]);
        }
        MultiMap r(f.out_color_, f.out_dim_, in_colors, in_dims);
        int contracted = f.in_dims_[s - 1];
        std::vector<int> rix(r.arity(), 0);
        std::vector<int> fix(f.arity(), 0), gix(g.arity(), 0);
        do {
            for (int i = 0; i < s - 1; ++i)
                fix[i] = rix[i];
            for (int i = 0; i < g.arity(); ++i)
                gix[i] = rix[s - 1 + i];
            for (int i = s; i < f.arity(); ++i)
                fix[i] = rix[g.arity() + i - 1];
            for (int o = 0; o < r.out_dim_; ++o) {
                Rational acc(0);
                for (int k = 0; k < contracted; ++k) {
                    fix[s - 1] = k;
                    const Rational& fa = f.at({o, fix});
                    if (fa.is_zero())
                        continue;
                    const Rational& ga = g.at({k, gix});
                    if (ga.is_zero())
                        continue;
                    acc += fa * ga;
                }
                if (!acc.is_zero())
                    r.at({o, rix}) = acc;
            }
        } while (next_index(rix, r.in_dims_));
        return r;
    }

    // right action of a permutation: (f.sigma)(x_1,...,x_n) = f(x_{sigma(1)},...).
    // Only color-preserving permutations are allowed.
    friend MultiMap apply_permutation(const MultiMap& f, const Perm& sigma)
    {
        if (static_cast<int>(sigma.size()) != f.arity())
            throw std::invalid_argument("apply_permutation: size mismatch");
        for (int i = 0; i < f.arity(); ++i)
            if (f.in_colors_[sigma[i]] != f.in_colors_[i])
                throw std::invalid_argument("apply_permutation: color mismatch");
        if (is_identity(sigma))
            return f;
        MultiMap r(f.out_color_, f.out_dim_, f.in_colors_, f.in_dims_);
        std::vector<int> rix(r.arity(), 0), fix(f.arity(), 0);
        do {
            for (int i = 0; i < f.arity(); ++i)
                fix[i] = rix[sigma[i]];
            for (int o = 0; o < r.out_dim_; ++o) {
                const Rational& v = f.at({o, fix});
                if (!v.is_zero())
                    r.at({o, rix}) = v;
            }
        } while (next_index(rix, r.in_dims_));
        return r;
    }

    // (1/n!) sum_sigma sgn(sigma) f.sigma; requires all input colors equal
    friend MultiMap antisymmetrize(const MultiMap& f)
    {
        for (Color c : f.in_colors_)
            if (c != f.in_colors_[0])
                throw std::invalid_argument("antisymmetrize: mixed input colors");
        int n = f.arity();
        if (n <= 1)
            return f;
        MultiMap acc(f.out_color_, f.out_dim_, f.in_colors_, f.in_dims_);
        Perm sigma = perm_identity(n);
        long long count = 0;
        do {
            acc += Rational(perm_sign(sigma)) * apply_permutation(f, sigma);
            ++count;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        return Rational(1, count) * acc;
    }

    bool is_alternating() const
    {
        if (arity() <= 1)
            return true;
        // transpositions of adjacent slots generate the symmetric group
        for (int s = 0; s + 1 < arity(); ++s) {
            Perm t = perm_identity(arity());
            std::swap(t[s], t[s + 1]);
            if (apply_permutation(*this, t) != Rational(-1) * *this)
                return false;
        }
        return true;
    }

    static bool next_index(std::vector<int>& ix, const std::vector<int>& dims)
    {
        for (size_t i = ix.size(); i-- > 0;) {
            if (++ix[i] < dims[i])
                return true;
            ix[i] = 0;
        }
        return false;
    }

  private:
    Color out_color_ = Color::B;
    int out_dim_ = 1;
    std::vector<Color> in_colors_;
    std::vector<int> in_dims_;
    std::vector<Rational> coeffs_;

    size_t flat_size() const
    {
        size_t s = static_cast<size_t>(out_dim_);
        for (int d : in_dims_)
            s *= static_cast<size_t>(d);
        return s;
    }
    size_t flatten(const Index& ix) const
    {
        size_t f = static_cast<size_t>(ix.out);
        for (size_t i = 0; i < in_dims_.size(); ++i)
            f = f * in_dims_[i] + ix.in[i];
        return f;
    }
    void require_same(const MultiMap& o, const char* who) const
    {
        if (!same_signature(o))
            throw std::invalid_argument(std::string(who) + ": signature mismatch");
    }
};

} // namespace defc
