#pragma once

#include "germlab/checked.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace germlab {

// Bijection of {0..d-1}; composition a*b applies a first, then b.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img_(std::move(images))
    {
        std::vector<char> seen(img_.size(), 0);
        for (int v : img_) {
            require(v >= 0 && v < static_cast<int>(img_.size()) && !seen[v],
                    "Permutation: images are not a bijection");
            seen[v] = 1;
        }
    }

    static Permutation identity(int d)
    {
        std::vector<int> v(d);
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v));
    }
    static Permutation transposition(int d, int i, int j)
    {
        require(i != j && i >= 0 && j >= 0 && i < d && j < d, "transposition: bad points");
        Permutation p = identity(d);
        std::swap(p.img_[i], p.img_[j]);
        return p;
    }
    // Cycles given with 0-based points.
    static Permutation from_cycles(int d, const std::vector<std::vector<int>>& cycles)
    {
        Permutation p = identity(d);
        for (const auto& c : cycles)
            for (std::size_t i = 0; i < c.size(); ++i)
                p.img_.at(c[i]) = c[(i + 1) % c.size()];
        return Permutation(p.img_);
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    Permutation operator*(const Permutation& o) const
    {
        std::vector<int> r(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i)
            r[i] = o.img_[img_[i]];
        Permutation p;
        p.img_ = std::move(r);
        return p;
    }
    Permutation inverse() const
    {
        Permutation p;
        p.img_.resize(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i)
            p.img_[img_[i]] = static_cast<int>(i);
        return p;
    }
    // g^{-1} * this * g, i.e. relabel each point i as g(i).
    Permutation conjugate_by(const Permutation& g) const { return g.inverse() * (*this) * g; }

    bool is_identity() const
    {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != static_cast<int>(i))
                return false;
        return true;
    }

    // Cycle lengths including fixed points, in order of smallest element.
    std::vector<int> cycle_lengths() const
    {
        std::vector<int> out;
        std::vector<char> seen(img_.size(), 0);
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i])
                continue;
            int len = 0;
            for (std::size_t j = i; !seen[j]; j = img_[j]) {
                seen[j] = 1;
                ++len;
            }
            out.push_back(len);
        }
        return out;
    }
    int cycle_count() const { return static_cast<int>(cycle_lengths().size()); }

    std::vector<std::vector<int>> cycles() const
    {
        std::vector<std::vector<int>> out;
        std::vector<char> seen(img_.size(), 0);
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i])
                continue;
            std::vector<int> c;
            for (std::size_t j = i; !seen[j]; j = img_[j]) {
                seen[j] = 1;
                c.push_back(static_cast<int>(j));
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    Int order() const
    {
        Int o = 1;
        for (int l : cycle_lengths())
            o = std::lcm(o, Int(l));
        return o;
    }

    bool is_transposition() const
    {
        int moved = 0;
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != static_cast<int>(i))
                ++moved;
        return moved == 2 && (*this * *this).is_identity();
    }

    // 1-based cycle notation without fixed points, "()" for the identity.
    std::string cycle_notation() const
    {
        std::string s;
        for (const auto& c : cycles()) {
            if (c.size() == 1)
                continue;
            s += "(";
            for (std::size_t i = 0; i < c.size(); ++i)
                s += (i ? " " : "") + std::to_string(c[i] + 1);
            s += ")";
        }
        return s.empty() ? "()" : s;
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> img_;
};

// Parse 1-based cycle notation such as "(1 2 3)(4 5)".
inline Permutation parse_cycles(int d, const std::string& text)
{
    std::vector<std::vector<int>> cycles;
    std::vector<int> cur;
    bool open = false;
    std::string num;
    auto flush = [&] {
        if (!num.empty()) {
            int v = std::stoi(num) - 1;
            require(v >= 0 && v < d, "parse_cycles: point out of range");
            cur.push_back(v);
            num.clear();
        }
    };
    for (char ch : text) {
        if (ch == '(') {
            require(!open, "parse_cycles: nested parenthesis");
            open = true;
        } else if (ch == ')') {
            require(open, "parse_cycles: unbalanced parenthesis");
            flush();
            cycles.push_back(cur);
            cur.clear();
            open = false;
        } else if (ch == ' ' || ch == ',') {
            flush();
        } else if (ch >= '0' && ch <= '9') {
            num += ch;
        } else {
            throw InvalidInput(std::string("parse_cycles: unexpected character '") + ch + "'");
        }
    }
    require(!open, "parse_cycles: unterminated cycle");
    std::vector<char> seen(d, 0);
    for (auto& c : cycles)
        for (int v : c) {
            require(!seen[v], "parse_cycles: point repeated");
            seen[v] = 1;
        }
    return Permutation::from_cycles(d, cycles);
}

// With t a transposition: <gens> = S_d iff the conjugates of t under <gens>
// connect all points (they then generate S_d and lie in the group).
inline bool generates_symmetric(const std::vector<Permutation>& gens, const Permutation& t)
{
    const int d = t.degree();
    if (d == 1)
        return true;
    int i = -1, j = -1;
    for (int x = 0; x < d; ++x)
        if (t(x) != x)
            (i < 0 ? i : j) = x;
    require(t.is_transposition(), "generates_symmetric: t must be a transposition");

    std::vector<char> seen(static_cast<std::size_t>(d) * d, 0);
    std::vector<std::pair<int, int>> stack{{i, j}};
    seen[i * d + j] = seen[j * d + i] = 1;
    std::vector<int> parent(d);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = d;
    auto join = [&](int u, int v) {
        u = find(u);
        v = find(v);
        if (u != v) {
            parent[u] = v;
            --components;
        }
    };
    join(i, j);
    while (!stack.empty()) {
        auto [u, v] = stack.back();
        stack.pop_back();
        auto visit = [&](const Permutation& g) {
            int a = g(u), b = g(v);
            if (!seen[a * d + b]) {
                seen[a * d + b] = seen[b * d + a] = 1;
                join(a, b);
                stack.push_back({a, b});
            }
        };
        visit(t);
        for (const auto& g : gens)
            visit(g);
    }
    return components == 1;
}

} // namespace germlab
