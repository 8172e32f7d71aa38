#pragma once

#include "germlab/checked.hpp"
#include "germlab/pairs_tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace germlab {

// Ordered solution candidate (k1,k2,q1,q2) of k1k2 - k1q2 - k2q1 = 1.
struct DioSol4 {
    Int k1 = 0, k2 = 0, q1 = 0, q2 = 0;

    std::string str() const
    {
        return "(" + std::to_string(k1) + "," + std::to_string(k2) + "," + std::to_string(q1) +
               "," + std::to_string(q2) + ")";
    }
    friend auto operator<=>(const DioSol4&, const DioSol4&) = default;
};

inline Int eq1_residual(Int k1, Int k2, Int q1, Int q2)
{
    return sub(sub(mul(k1, k2), mul(k1, q2)), mul(k2, q1)) - 1;
}

inline Int eq1_residual(const DioSol4& s) { return eq1_residual(s.k1, s.k2, s.q1, s.q2); }

inline bool in_D(const DioSol4& s) { return s.k1 >= 1 && s.k2 >= 1 && eq1_residual(s) == 0; }

inline bool in_DP(const DioSol4& s)
{
    return in_D(s) && 0 <= s.q1 && s.q1 < s.k1 && 0 <= s.q2 && s.q2 < s.k2;
}

inline bool in_DP0(const DioSol4& s) { return in_DP(s) && std::min(s.k1, s.k2) >= 2; }

enum class HGen { H1, H1INV, H2 };

inline std::string hgen_name(HGen g)
{
    switch (g) {
    case HGen::H1: return "H1";
    case HGen::H1INV: return "H1INV";
    default: return "H2";
    }
}

inline DioSol4 apply_h(const DioSol4& s, HGen g)
{
    require(eq1_residual(s) == 0, [&] { return std::string("apply_h: " + s.str() + " does not satisfy k1k2-k1q2-k2q1=1"); });
    switch (g) {
    case HGen::H1: return {add(s.k1, s.k2), s.k2, sub(add(s.k2, s.q1), s.q2), s.q2};
    case HGen::H1INV: return {sub(s.k1, s.k2), s.k2, sub(add(s.q1, s.q2), s.k2), s.q2};
    default: return {s.k2, s.k1, s.q2, s.q1};
    }
}

// The unique member of D_P over an ordered coprime pair.
inline DioSol4 dp_member(Int k1, Int k2)
{
    require(k1 >= 1 && k2 >= 1 && coprime(k1, k2), "dp_member: need coprime positive pair");
    Int q2 = mod(-mod_inverse(k1, k2), k2);
    Int num = sub(sub(mul(k1, k2), mul(k1, q2)), Int{1});
    ensure(num % k2 == 0, "dp_member: non-integral q1");
    DioSol4 s{k1, k2, num / k2, q2};
    ensure(in_DP(s), "dp_member: result outside D_P");
    return s;
}

// {k1/q1, k2/q2} with k1 >= k2; {1/0,1/0} is the root of the decorated tree.
class DecoratedOrbit {
public:
    DecoratedOrbit(Int k1, Int q1, Int k2, Int q2) : s_{k1, k2, q1, q2}
    {
        if (s_.k1 < s_.k2)
            s_ = {k2, k1, q2, q1};
        require(in_DP(s_), [&] { return std::string("decorated orbit {" + std::to_string(k1) + "/" + std::to_string(q1) +
                               "," + std::to_string(k2) + "/" + std::to_string(q2) +
                               "} is not a bounded solution"); });
    }

    static DecoratedOrbit root() { return DecoratedOrbit(1, 0, 1, 0); }

    Int k1() const { return s_.k1; }
    Int q1() const { return s_.q1; }
    Int k2() const { return s_.k2; }
    Int q2() const { return s_.q2; }
    const DioSol4& sol() const { return s_; }
    bool is_root() const { return s_.k1 == 1 && s_.k2 == 1; }

    std::string str() const
    {
        return "{" + std::to_string(k1()) + "/" + std::to_string(q1()) + "," +
               std::to_string(k2()) + "/" + std::to_string(q2()) + "}";
    }
    friend auto operator<=>(const DecoratedOrbit&, const DecoratedOrbit&) = default;

private:
    DioSol4 s_;
};

inline Orbit pr(const DecoratedOrbit& o) { return Orbit(o.k1(), o.k2()); }

inline std::pair<Int, Int> pr1(const DecoratedOrbit& o) { return {o.k1(), o.q1()}; }

inline DecoratedOrbit decorated_action(const DecoratedOrbit& o, Letter l)
{
    Int s = add(o.k1(), o.k2());
    if (l == Letter::A)
        return DecoratedOrbit(s, sub(add(o.k2(), o.q1()), o.q2()), o.k2(), o.q2());
    return DecoratedOrbit(s, sub(add(o.k1(), o.q2()), o.q1()), o.k1(), o.q1());
}

inline std::pair<DecoratedOrbit, Edge> decorated_euclid_step(const DecoratedOrbit& o)
{
    require(!o.is_root(), "decorated_euclid_step: root is terminal");
    Int k = sub(o.k1(), o.k2());
    Int q = sub(add(o.q1(), o.q2()), o.k2());
    if (o.k1() >= 2 * o.k2())
        return {DecoratedOrbit(k, q, o.k2(), o.q2()), Edge::E1};
    return {DecoratedOrbit(o.k2(), o.q2(), k, q), Edge::E2};
}

inline DecoratedOrbit pr_inverse(const Orbit& o)
{
    require(!o.is_root(), "pr_inverse: root sentinel has no decoration");
    DecoratedOrbit d = DecoratedOrbit::root();
    for (Letter l : path_to_root(o).letters)
        d = decorated_action(d, l);
    ensure(pr(d) == o, [&] { return std::string("pr_inverse: replay drifted from " + o.str()); });
    return d;
}

inline DecoratedOrbit pr1_inverse(Int k1, Int q1)
{
    require(k1 > q1 && q1 >= 1, "pr1_inverse: need k1 > q1 >= 1");
    require(coprime(k1, q1), "pr1_inverse: k1 and q1 must be coprime");
    // q1*k2 + 1 = k1*n with 0 < k2 < k1.
    Int k2 = mod(-mod_inverse(q1, k1), k1);
    ensure(k2 > 0 && k2 < k1, "pr1_inverse: k2 out of range");
    Int n = add(mul(q1, k2), Int{1}) / k1;
    return DecoratedOrbit(k1, q1, k2, sub(k2, n));
}

// k2 <= q1 + q2 < k1 away from the root.
inline bool q_sum_bounds_hold(const DecoratedOrbit& o)
{
    if (o.is_root())
        return true;
    Int s = o.q1() + o.q2();
    return o.k2() <= s && s < o.k1();
}

inline std::vector<DecoratedOrbit> enumerate_decorated_to_level(int L)
{
    require(L >= 1, "enumerate_decorated_to_level: level must be at least 1");
    std::vector<DecoratedOrbit> cur{DecoratedOrbit::root()};
    if (L == 1)
        return cur;
    cur = {decorated_action(DecoratedOrbit::root(), Letter::A)};
    for (int lv = 3; lv <= L; ++lv) {
        std::vector<DecoratedOrbit> next;
        next.reserve(cur.size() * 2);
        for (const auto& o : cur) {
            next.push_back(decorated_action(o, Letter::A));
            next.push_back(decorated_action(o, Letter::B));
        }
        cur = std::move(next);
    }
    return cur;
}

// (a1,a2) with k1*a2 - k2*a1 = q1 - q2, 0 < a1 <= k1, 0 < a2 <= k2.
struct AuxSol {
    DioSol4 base;
    Int a1 = 0, a2 = 0;
    friend bool operator==(const AuxSol&, const AuxSol&) = default;
};

inline Int eq8_residual(const DioSol4& s, Int a1, Int a2)
{
    return sub(sub(mul(s.k1, a2), mul(s.k2, a1)), sub(s.q1, s.q2));
}

inline bool aux_in_box(const DioSol4& s, Int a1, Int a2)
{
    return 0 < a1 && a1 <= s.k1 && 0 < a2 && a2 <= s.k2;
}

inline AuxSol solve_aux(const DioSol4& s)
{
    require(in_DP0(s), [&] { return std::string("solve_aux: " + s.str() + " is not in D_P with min(k1,k2) >= 2"); });
    AuxSol r{s, 0, 0};
    if (s.q1 == s.q2) {
        r.a1 = s.k1;
        r.a2 = s.k2;
    } else if (s.q1 > s.q2) {
        Int b = s.q1 - s.q2;
        r.a1 = mod(mul(-b, mod_inverse(s.k2, s.k1)), s.k1);
        r.a2 = add(mul(s.k2, r.a1), b) / s.k1;
    } else {
        Int b = s.q2 - s.q1;
        r.a2 = mod(mul(-b, mod_inverse(s.k1, s.k2)), s.k2);
        r.a1 = add(mul(s.k1, r.a2), b) / s.k2;
    }
    ensure(aux_in_box(s, r.a1, r.a2) && eq8_residual(s, r.a1, r.a2) == 0, [&] { return std::string("solve_aux: construction left the box for " + s.str()); });
    return r;
}

struct ExtSol8 {
    Int k1 = 0, k2 = 0, q1 = 0, q2 = 0, q3 = 0, q4 = 0, m1 = 0, m2 = 0;

    DioSol4 base() const { return {k1, k2, q1, q2}; }
    std::string str() const
    {
        return "(" + std::to_string(k1) + "," + std::to_string(k2) + "," + std::to_string(q1) +
               "," + std::to_string(q2) + "," + std::to_string(q3) + "," + std::to_string(q4) +
               "," + std::to_string(m1) + "," + std::to_string(m2) + ")";
    }
    friend auto operator<=>(const ExtSol8&, const ExtSol8&) = default;
};

inline Int eq2_residual(const ExtSol8& e)
{
    Int s = add(e.k1, e.k2);
    Int p = mul(e.k1, e.k2);
    return sub(sub(mul(p, s), mul(p, e.q3)), mul(e.q4, s)) - 1;
}

inline bool eq3_holds(const ExtSol8& e)
{
    return e.q4 == add(mul(e.k1, e.m1), e.q1) && e.q4 == add(mul(e.k2, e.m2), e.q2);
}

inline bool ext_in_bounds(const ExtSol8& e)
{
    return std::min(e.k1, e.k2) >= 2 && e.m1 >= 0 && e.m2 >= 0 && 0 < e.q1 && e.q1 < e.k1 &&
           0 < e.q2 && e.q2 < e.k2 && 0 < e.q3 && e.q3 < e.k1 + e.k2 && 0 < e.q4 &&
           e.q4 < e.k1 * e.k2;
}

inline bool ext_valid(const ExtSol8& e)
{
    return eq1_residual(e.base()) == 0 && eq2_residual(e) == 0 && eq3_holds(e) &&
           ext_in_bounds(e) && e.m1 + e.m2 + e.q3 == e.k1 + e.k2 - 1;
}

inline ExtSol8 extend_to_8(const DioSol4& s)
{
    AuxSol a = solve_aux(s);
    ExtSol8 e{s.k1, s.k2, s.q1, s.q2, 0, 0, 0, 0};
    e.q3 = a.a1 + a.a2 - 1;
    e.m1 = s.k2 - a.a2;
    e.m2 = s.k1 - a.a1;
    e.q4 = add(mul(s.k1, e.m1), s.q1);
    ensure(ext_valid(e), [&] { return std::string("extend_to_8: closed form fails the system for " + s.str()); });
    return e;
}

// Exhaustive layers over the bounded boxes, independent of the constructions above.
namespace scan {

inline std::vector<AuxSol> aux_solutions(const DioSol4& s)
{
    std::vector<AuxSol> out;
    for (Int a1 = 1; a1 <= s.k1; ++a1)
        for (Int a2 = 1; a2 <= s.k2; ++a2)
            if (eq8_residual(s, a1, a2) == 0)
                out.push_back({s, a1, a2});
    return out;
}

// Every (q3,q4) in the box is visited; q4 is read off the second equation since it enters linearly.
inline std::vector<ExtSol8> ext_solutions(const DioSol4& s)
{
    std::vector<ExtSol8> out;
    Int sum = add(s.k1, s.k2), prod = mul(s.k1, s.k2);
    for (Int q3 = 1; q3 < sum; ++q3) {
        Int num = sub(sub(mul(prod, sum), mul(prod, q3)), Int{1});
        if (num % sum != 0)
            continue;
        Int q4 = num / sum;
        if (q4 <= 0 || q4 >= prod)
            continue;
        if ((q4 - s.q1) % s.k1 != 0 || (q4 - s.q2) % s.k2 != 0)
            continue;
        ExtSol8 e{s.k1, s.k2, s.q1, s.q2, q3, q4, (q4 - s.q1) / s.k1, (q4 - s.q2) / s.k2};
        if (e.m1 >= 0 && e.m2 >= 0 && eq2_residual(e) == 0 && eq3_holds(e) && ext_in_bounds(e))
            out.push_back(e);
    }
    return out;
}

inline std::vector<DioSol4> dp_solutions(Int k1, Int k2)
{
    std::vector<DioSol4> out;
    for (Int q2 = 0; q2 < k2; ++q2)
        for (Int q1 = 0; q1 < k1; ++q1)
            if (eq1_residual(k1, k2, q1, q2) == 0)
                out.push_back({k1, k2, q1, q2});
    return out;
}

} // namespace scan

} // namespace germlab
