#pragma once

#include "germlab/checked.hpp"
#include "germlab/diophantine.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <vector>

namespace germlab {

// Ordered weight list; the first element is the origin.
struct WeightedChain {
    std::vector<Int> weights;

    std::size_t size() const { return weights.size(); }
    bool empty() const { return weights.empty(); }
    WeightedChain reversed() const
    {
        return {std::vector<Int>(weights.rbegin(), weights.rend())};
    }
    std::string str() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < weights.size(); ++i)
            s += (i ? "," : "") + std::to_string(weights[i]);
        return s + "]";
    }
    friend bool operator==(const WeightedChain&, const WeightedChain&) = default;
};

// D_{-1} = 0, D_0 = 1, D_n = u_n D_{n-1} - D_{n-2}.
inline Int continuant(std::span<const Int> u)
{
    Int prev = 0, cur = 1;
    for (Int w : u) {
        Int next = sub(mul(w, cur), prev);
        prev = cur;
        cur = next;
    }
    return cur;
}

inline Int continuant(const WeightedChain& c) { return continuant(std::span<const Int>(c.weights)); }

inline std::vector<Int> prefix_continuants(std::span<const Int> u)
{
    std::vector<Int> out;
    out.reserve(u.size());
    Int prev = 0, cur = 1;
    for (Int w : u) {
        Int next = sub(mul(w, cur), prev);
        prev = cur;
        cur = next;
        out.push_back(cur);
    }
    return out;
}

inline WeightedChain hj_expand(Int k, Int q)
{
    require(k > q && q >= 1, "hj_expand: need k > q >= 1");
    require(coprime(k, q), "hj_expand: k and q must be coprime");
    WeightedChain c;
    while (q > 0) {
        Int w = (k + q - 1) / q;
        c.weights.push_back(w);
        Int r = w * q - k;
        k = q;
        q = r;
    }
    return c;
}

inline std::pair<Int, Int> chain_to_fraction(const WeightedChain& c)
{
    require(!c.empty(), "chain_to_fraction: empty chain");
    for (Int w : c.weights)
        require(w >= 2, [&] { return std::string("chain_to_fraction: weight " + std::to_string(w) + " below 2"); });
    Int k = continuant(c);
    Int q = continuant(std::span<const Int>(c.weights).subspan(1));
    ensure(hj_expand(k, q) == c, "chain_to_fraction: expansion does not round-trip");
    return {k, q};
}

inline Int pi1_order(const WeightedChain& c)
{
    Int d = continuant(c);
    return d < 0 ? -d : d;
}

// Sylvester test on the leading minors, which are the prefix continuants.
inline bool is_positive_definite(const WeightedChain& c)
{
    for (Int m : prefix_continuants(c.weights))
        if (m <= 0)
            return false;
    return true;
}

// Γ_left ⊕ [center] ⊕ Γ_right.
struct CenteredChain {
    WeightedChain left;
    Int center = 1;
    WeightedChain right;

    WeightedChain full() const
    {
        WeightedChain c = left;
        c.weights.push_back(center);
        c.weights.insert(c.weights.end(), right.weights.begin(), right.weights.end());
        return c;
    }
    // 1-based position of the center in the full chain.
    std::size_t center_index() const { return left.size() + 1; }

    // Drop the i vertices closest to the center; one past the end gives D_{-1} = 0.
    Int dlt(std::size_t i) const
    {
        if (i > left.size())
            return i == left.size() + 1 ? 0 : throw InvalidInput("dlt: index out of range");
        return continuant(std::span<const Int>(left.weights).first(left.size() - i));
    }
    Int drt(std::size_t i) const
    {
        if (i > right.size())
            return i == right.size() + 1 ? 0 : throw InvalidInput("drt: index out of range");
        return continuant(std::span<const Int>(right.weights).subspan(i));
    }
    friend bool operator==(const CenteredChain&, const CenteredChain&) = default;
};

inline Int center_identity(const CenteredChain& c)
{
    Int l0 = c.dlt(0), l1 = c.dlt(1), r0 = c.drt(0), r1 = c.drt(1);
    return sub(sub(mul(l0, r0), mul(r0, l1)), mul(l0, r1));
}

// Laplace expansion along the center row.
inline Int row_expansion(const CenteredChain& c)
{
    Int l0 = c.dlt(0), l1 = c.dlt(1), r0 = c.drt(0), r1 = c.drt(1);
    return sub(sub(mul(c.center, l0, r0), mul(r0, l1)), mul(l0, r1));
}

inline Int row_expansion_check(const CenteredChain& c)
{
    Int viaRow = row_expansion(c);
    Int direct = continuant(c.full());
    ensure(viaRow == direct, [&] { return std::string("row_expansion_check: row expansion " + std::to_string(viaRow) +
                                 " != continuant " + std::to_string(direct)); });
    return direct;
}

inline CenteredChain orbit_chain(const DecoratedOrbit& o)
{
    CenteredChain c;
    if (o.q1() >= 1)
        c.left = hj_expand(o.k1(), o.q1()).reversed();
    if (o.q2() >= 1)
        c.right = hj_expand(o.k2(), o.q2());
    c.center = 1;
    ensure(c.dlt(0) == o.k1() && c.dlt(1) == o.q1() && c.drt(0) == o.k2() && c.drt(1) == o.q2(), [&] { return std::string("orbit_chain: orientation mismatch for " + o.str()); });
    return c;
}

using Matrix = std::vector<std::vector<Int>>;

// M_{n,±}(u): u on the diagonal, ±1 beside it.
inline Matrix tridiagonal(std::span<const Int> u, Int off)
{
    std::size_t n = u.size();
    Matrix m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = u[i];
        if (i + 1 < n)
            m[i][i + 1] = m[i + 1][i] = off;
    }
    return m;
}

// Negated self-intersections on the diagonal, 1 for each adjacency.
inline Matrix intersection_matrix(const WeightedChain& c)
{
    std::vector<Int> neg(c.weights.size());
    std::transform(c.weights.begin(), c.weights.end(), neg.begin(), [](Int w) { return -w; });
    return tridiagonal(neg, 1);
}

// Fraction-free Gaussian elimination; exact for integer matrices.
inline Int bareiss_det(Matrix m)
{
    std::size_t n = m.size();
    if (n == 0)
        return 1;
    __int128 sign = 1, prevPivot = 1;
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m[i][j];
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prevPivot;
        prevPivot = a[k][k];
    }
    __int128 d = sign * a[n - 1][n - 1];
    if (d > INT64_MAX || d < INT64_MIN)
        throw Overflow("bareiss_det: determinant exceeds 64 bits");
    return static_cast<Int>(d);
}

} // namespace germlab
