#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace overdet {

// Exact arbitrary-precision scalars. All arithmetic in this library is exact;
// no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

inline Int factorial(std::size_t n) {
    Int f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= Int(i);
    return f;
}

// gcd of the absolute values of all entries; 0 for an all-zero vector.
inline Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

inline bool is_zero_vec(const IntVec& v) {
    for (const Int& x : v) {
        if (x != 0) return false;
    }
    return true;
}

// Divides out the content and fixes a sign so the first nonzero entry is
// positive. Zero vectors are returned unchanged.
inline IntVec primitive_vector(IntVec v) {
    Int g = content(v);
    if (g == 0) return v;
    for (Int& x : v) x /= g;
    return v;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = base;
    bool neg = e < 0;
    unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat acc = 1;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    if (neg) acc = Rat(1) / acc;
    return acc;
}

// Rationals render as "p" or "p/q" with q > 0; this is the wire format used
// by the JSON layer as well.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

}  // namespace overdet
