#pragma once

#include "germlab/checked.hpp"

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace germlab {

// Unordered coprime pair {k1,k2}, stored with k1 >= k2.
class Orbit {
public:
    Orbit(Int a, Int b)
    {
        if (a < b)
            std::swap(a, b);
        require(b >= 1, [&] { return std::string("orbit {" + std::to_string(a) + "," + std::to_string(b) +
                            "}: components must be positive"); });
        require(coprime(a, b), [&] { return std::string("orbit {" + std::to_string(a) + "," + std::to_string(b) +
                                   "}: components must be coprime"); });
        k1_ = a;
        k2_ = b;
    }

    static Orbit root() { return Orbit(); }
    static Orbit unit() { return Orbit(1, 1); }

    Int k1() const { return k1_; }
    Int k2() const { return k2_; }
    bool is_root() const { return k2_ == 0; }
    bool is_unit() const { return k1_ == 1 && k2_ == 1; }

    std::string str() const
    {
        return "{" + std::to_string(k1_) + "," + std::to_string(k2_) + "}";
    }

    friend auto operator<=>(const Orbit&, const Orbit&) = default;

private:
    Orbit() : k1_(1), k2_(0) {}
    Int k1_;
    Int k2_;
};

enum class Letter { A, B };
enum class Edge { E1, E2 };

inline char letter_char(Letter l) { return l == Letter::A ? 'A' : 'B'; }
inline std::string edge_name(Edge e) { return e == Edge::E1 ? "E1" : "E2"; }
inline std::string edge_greek(Edge e) { return e == Edge::E1 ? "ε1" : "ε2"; }

// Inverse letter of an edge: ε1 undoes α, ε2 undoes β.
inline Letter letter_of(Edge e) { return e == Edge::E1 ? Letter::A : Letter::B; }
inline Edge edge_of(Letter l) { return l == Letter::A ? Edge::E1 : Edge::E2; }

struct TreePath {
    std::vector<Letter> letters;

    std::string str() const
    {
        std::string s;
        for (Letter l : letters)
            s += letter_char(l);
        return s;
    }
    friend bool operator==(const TreePath&, const TreePath&) = default;
};

inline Orbit apply_action(const Orbit& o, Letter l)
{
    require(!o.is_root(), "apply_action: root sentinel {1,0} has no successors");
    Int s = add(o.k1(), o.k2());
    return l == Letter::A ? Orbit(s, o.k2()) : Orbit(s, o.k1());
}

inline std::pair<Orbit, Edge> euclid_step(const Orbit& o)
{
    require(!o.is_root() && !o.is_unit(), [&] { return std::string("euclid_step: " + o.str() + " is terminal"); });
    Int a = o.k1(), b = o.k2();
    // {2,1} satisfies both rules; E1 wins the tie.
    if (a >= 2 * b)
        return {Orbit(a - b, b), Edge::E1};
    return {Orbit(b, a - b), Edge::E2};
}

inline Int n_euclid(Int k1, Int k2)
{
    require(k1 >= 1 && k2 >= 1, "n_euclid: components must be positive");
    require(coprime(k1, k2), "n_euclid: components must be coprime");
    Orbit o(k1, k2);
    Int n = 0;
    while (!o.is_unit()) {
        o = euclid_step(o).first;
        ++n;
    }
    return n;
}

// Word w with replay({1,1}, w) == o.
inline TreePath path_to_root(const Orbit& o)
{
    require(!o.is_root(), "path_to_root: root sentinel has no path");
    TreePath p;
    Orbit cur = o;
    while (!cur.is_unit()) {
        auto [next, e] = euclid_step(cur);
        p.letters.push_back(letter_of(e));
        cur = next;
    }
    std::reverse(p.letters.begin(), p.letters.end());
    return p;
}

inline Orbit replay(const TreePath& p, Orbit start = Orbit::unit())
{
    Orbit o = start;
    for (Letter l : p.letters)
        o = apply_action(o, l);
    return o;
}

inline Int level(const Orbit& o)
{
    if (o.is_root())
        return 0;
    return static_cast<Int>(path_to_root(o).letters.size()) + 1;
}

// Orbits at exactly level L.
inline std::vector<Orbit> enumerate_to_level(int L)
{
    require(L >= 1, "enumerate_to_level: level must be at least 1");
    std::vector<Orbit> cur{Orbit::unit()};
    if (L == 1)
        return cur;
    // α and β agree on {1,1}, so level 2 has a single orbit.
    cur = {apply_action(Orbit::unit(), Letter::A)};
    for (int lv = 3; lv <= L; ++lv) {
        std::vector<Orbit> next;
        next.reserve(cur.size() * 2);
        for (const Orbit& o : cur) {
            next.push_back(apply_action(o, Letter::A));
            next.push_back(apply_action(o, Letter::B));
        }
        cur = std::move(next);
    }
    return cur;
}

} // namespace germlab
