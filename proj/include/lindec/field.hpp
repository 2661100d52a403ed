#pragma once

// Arithmetic in the prime field F_p with a runtime modulus. Field elements are
// plain uint64_t values kept in canonical range [0, p); the modulus lives in a
// small PrimeField handle passed alongside containers (the same shape NTL-style
// exact-linear-algebra code uses, minus the global context). p is restricted to
// < 2^32 so a product of two canonical values fits in uint64_t.

#include <cstdint>

#include "lindec/errors.hpp"
#include "lindec/opcount.hpp"

namespace lindec {

bool is_prime(std::uint64_t n);

class PrimeField {
  public:
    // Throws ConfigError unless p is a prime below 2^32.
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        count_field_ops(1);
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        count_field_ops(1);
        return a >= b ? a - b : a + p_ - b;
    }

    std::uint64_t neg(std::uint64_t a) const {
        count_field_ops(1);
        return a == 0 ? 0 : p_ - a;
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        count_field_ops(1);
        return (a * b) % p_;
    }

    // Extended-Euclid inverse; counted as a single field operation.
    // Throws DivisionByZero on a == 0.
    std::uint64_t inv(std::uint64_t a) const;

    // Square-and-multiply; cost is the constituent multiplications.
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    // Canonicalizes an arbitrary signed value (not counted: normalization,
    // not arithmetic).
    std::uint64_t from_int(std::int64_t v) const {
        std::int64_t m = static_cast<std::int64_t>(p_);
        std::int64_t r = v % m;
        if (r < 0) r += m;
        return static_cast<std::uint64_t>(r);
    }

    std::uint64_t reduce(std::uint64_t v) const { return v % p_; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) {
        return a.p_ == b.p_;
    }
    friend bool operator!=(const PrimeField& a, const PrimeField& b) {
        return !(a == b);
    }

  private:
    std::uint64_t p_;
};

} // namespace lindec
