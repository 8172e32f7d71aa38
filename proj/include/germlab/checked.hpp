#pragma once

#include <concepts>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace germlab {

using Int = std::int64_t;

// Domain precondition violated by the caller.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Overflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// An identity that must hold by construction did not.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Exhaustive mode refused because the search space exceeds the configured cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <typename T>
    requires std::is_integral_v<T>
T add(T a, T b)
{
    T r;
    if (__builtin_add_overflow(a, b, &r))
        throw Overflow("integer overflow in addition");
    return r;
}

template <typename T>
    requires std::is_integral_v<T>
T sub(T a, T b)
{
    T r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Overflow("integer overflow in subtraction");
    return r;
}

template <typename T>
    requires std::is_integral_v<T>
T mul(T a, T b)
{
    T r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Overflow("integer overflow in multiplication");
    return r;
}

template <typename T, typename... Rest>
    requires std::is_integral_v<T>
T mul(T a, T b, Rest... rest)
{
    return mul(mul(a, b), T(rest)...);
}

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

inline bool coprime(Int a, Int b) { return gcd(a, b) == 1; }

// Floor division for b > 0.
inline Int floor_div(Int a, Int b)
{
    Int q = a / b;
    if ((a % b != 0) && (a < 0))
        --q;
    return q;
}

inline Int mod(Int a, Int b)
{
    Int r = a % b;
    return r < 0 ? r + b : r;
}

// Inverse of a modulo m, m >= 1, gcd(a,m) = 1.
inline Int mod_inverse(Int a, Int m)
{
    if (m == 1)
        return 0;
    Int r0 = m, r1 = mod(a, m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Int s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1)
        throw InvalidInput("mod_inverse: arguments not coprime");
    return mod(s0, m);
}

// Messages are either literals or callables, so passing checks never allocate.
inline void require(bool cond, const char* what)
{
    if (!cond)
        throw InvalidInput(what);
}
template <std::invocable F>
void require(bool cond, F&& what)
{
    if (!cond)
        throw InvalidInput(what());
}

inline void ensure(bool cond, const char* what)
{
    if (!cond)
        throw InternalError(what);
}
template <std::invocable F>
void ensure(bool cond, F&& what)
{
    if (!cond)
        throw InternalError(what());
}

} // namespace germlab
