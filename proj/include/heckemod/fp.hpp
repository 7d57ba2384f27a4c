#pragma once

#include <cstdint>
#include <stdexcept>

namespace heckemod {

/// Arithmetic in the prime field F_p for a small runtime modulus p.
/// Values are always kept reduced to {0, ..., p-1}.
struct PrimeField {
    uint32_t p;

    explicit PrimeField(uint32_t modulus) : p(modulus) {
        if (p < 2 || !is_prime(p))
            throw std::invalid_argument("PrimeField: modulus must be a small prime");
    }

    static bool is_prime(uint32_t n) {
        if (n < 2) return false;
        for (uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    uint32_t reduce(int64_t x) const {
        int64_t r = x % static_cast<int64_t>(p);
        if (r < 0) r += p;
        return static_cast<uint32_t>(r);
    }

    uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % p; }
    uint32_t sub(uint32_t a, uint32_t b) const { return (a + p - b) % p; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
    }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }

    uint32_t inv(uint32_t a) const {
        if (a % p == 0) throw std::domain_error("PrimeField::inv: zero is not invertible");
        // Fermat: a^(p-2), p is tiny so repeated squaring is overkill but harmless.
        uint32_t result = 1, base = a % p;
        uint32_t e = p - 2;
        while (e) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }
};

}  // namespace heckemod
