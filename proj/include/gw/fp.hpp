#pragma once

#include <cstdint>
#include <stdexcept>

namespace gw {

// Scalar arithmetic in F_p. Primes are expected to stay small (the whole
// workbench defaults to p = 2 or 3), but anything below 2^15 is safe:
// products are widened to 64 bits before reduction.

inline std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p) {
    return a == 0 ? 0 : p - a;
}

inline std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t fp_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);

// Inverse of a nonzero residue, via Fermat. Throws on zero input.
std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p);

bool fp_is_prime(std::uint32_t p);

// Normalizes an integer (possibly negative) into [0, p).
inline std::uint32_t fp_from_int(long long v, std::uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

} // namespace gw
