#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace iset {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// log2 of a positive BigInt. Values that fit a double convert directly;
// larger ones go through the top 64 bits plus the bit length, which keeps
// the view weakly monotone.
inline double log2_of(const BigInt& v) {
    if (v <= 0) return -std::numeric_limits<double>::infinity();
    const std::size_t bits = boost::multiprecision::msb(v); // index of highest set bit
    if (bits < 960) return std::log2(v.convert_to<double>());
    const BigInt top = v >> (bits - 63);
    return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 63);
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

// Arbitrary-precision nonnegative count with a log2 view. Holds i(G);
// always >= 1 for a graph because the empty set is independent.
struct BigCount {
    BigInt value;

    BigCount() : value(0) {}
    explicit BigCount(BigInt v) : value(std::move(v)) {}
    explicit BigCount(std::uint64_t v) : value(v) {}

    double log2_view() const { return log2_of(value); }
    std::string str() const { return value.str(); }

    friend bool operator==(const BigCount& a, const BigCount& b) { return a.value == b.value; }
    friend bool operator==(const BigCount& a, std::uint64_t b) { return a.value == b; }
};

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

inline BigInt ceil_div(const BigInt& num, const BigInt& den) {
    return (num + den - 1) / den;
}

} // namespace iset
