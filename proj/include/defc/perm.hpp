#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "defc/rational.hpp"

namespace defc {

// A permutation of {1..n}, stored 0-based: p[i] = sigma(i+1) - 1.
using Perm = std::vector<int>;

inline Perm perm_identity(int n)
{
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline bool is_identity(const Perm& p)
{
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i))
            return false;
    return true;
}

inline Perm perm_inverse(const Perm& p)
{
    Perm q(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        q[p[i]] = static_cast<int>(i);
    return q;
}

// composition as functions: (p*q)(i) = p(q(i))
inline Perm perm_compose(const Perm& p, const Perm& q)
{
    if (p.size() != q.size())
        throw std::invalid_argument("perm_compose: size mismatch");
    Perm r(p.size());
    for (size_t i = 0; i < q.size(); ++i)
        r[i] = p[q[i]];
    return r;
}

inline int perm_sign(const Perm& p)
{
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            inv += p[i] > p[j];
    return inv % 2 ? -1 : 1;
}

// Koszul sign epsilon(sigma; d) defined by
//   x_1 ^ ... ^ x_n = epsilon * x_{sigma(1)} ^ ... ^ x_{sigma(n)}
// for elements of degrees d_i: one factor (-1)^{d_a d_b} per inversion.
inline int koszul_eps(const Perm& p, const std::vector<int>& degrees)
{
    if (p.size() != degrees.size())
        throw std::invalid_argument("koszul_eps: degree list size mismatch");
    long long e = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j])
                e += static_cast<long long>(degrees[p[i]]) * degrees[p[j]];
    return e % 2 ? -1 : 1;
}

// chi(sigma) = sgn(sigma) * epsilon(sigma; degrees), the sign in the L-infinity
// antisymmetry and relation sums.
inline Rational koszul_chi(const Perm& p, const std::vector<int>& degrees)
{
    return Rational(perm_sign(p) * koszul_eps(p, degrees));
}

struct SignedPermutation {
    Perm perm;
    int sign; // sgn(perm)
};

// All (p,q)-unshuffles of {1..p+q}: sigma with sigma(1)<...<sigma(p) and
// sigma(p+1)<...<sigma(p+q).
inline std::vector<SignedPermutation> enumerate_unshuffles(int p, int q)
{
    if (p < 0 || q < 0)
        throw std::invalid_argument("enumerate_unshuffles: negative block size");
    int n = p + q;
    std::vector<SignedPermutation> out;
    std::vector<int> pick(p);
    // iterate over p-subsets of {0..n-1} in lexicographic order
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        Perm sigma(n);
        std::vector<bool> used(n, false);
        for (int i = 0; i < p; ++i) {
            sigma[i] = pick[i];
            used[pick[i]] = true;
        }
        int k = p;
        for (int v = 0; v < n; ++v)
            if (!used[v])
                sigma[k++] = v;
        out.push_back({sigma, perm_sign(sigma)});
        if (p == 0)
            break;
        int i = p - 1;
        while (i >= 0 && pick[i] == n - p + i)
            --i;
        if (i < 0)
            break;
        ++pick[i];
        for (int j = i + 1; j < p; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    return out;
}

// Block unshuffles S^<_{r_1,...,r_l}: sigma increasing within each block of
// consecutive positions of sizes r_1,...,r_l, with the extra normalization
// sigma(start_i) < sigma(start_{i+1}) whenever r_i = r_{i+1}.  Requires the
// block sizes to be nondecreasing.
inline std::vector<SignedPermutation> enumerate_block_unshuffles(const std::vector<int>& r)
{
    for (size_t i = 0; i + 1 < r.size(); ++i)
        if (r[i] > r[i + 1])
            throw std::invalid_argument("enumerate_block_unshuffles: blocks not sorted");
    int n = 0;
    for (int ri : r) {
        if (ri <= 0)
            throw std::invalid_argument("enumerate_block_unshuffles: nonpositive block");
        n += ri;
    }
    std::vector<SignedPermutation> out;
    Perm sigma(n, -1);
    std::vector<bool> used(n, false);

    // assign image sets block by block, increasing within each block
    auto rec = [&](auto&& self, size_t block, int pos) -> void {
        if (block == r.size()) {
            out.push_back({sigma, perm_sign(sigma)});
            return;
        }
        std::vector<int> avail;
        for (int v = 0; v < n; ++v)
            if (!used[v])
                avail.push_back(v);
        int k = r[block];
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            bool ok = true;
            if (block > 0 && r[block - 1] == r[block]) {
                // equal-size blocks must have increasing first entries
                if (avail[idx[0]] < sigma[pos - r[block - 1]])
                    ok = false;
            }
            if (ok) {
                for (int i = 0; i < k; ++i) {
                    sigma[pos + i] = avail[idx[i]];
                    used[avail[idx[i]]] = true;
                }
                self(self, block + 1, pos + k);
                for (int i = 0; i < k; ++i)
                    used[avail[idx[i]]] = false;
            }
            int i = k - 1;
            int m = static_cast<int>(avail.size());
            while (i >= 0 && idx[i] == m - k + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    };
    rec(rec, 0, 0);
    return out;
}

inline long long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace defc
