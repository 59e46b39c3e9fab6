#pragma once

#include <cstdint>

#include "matsplit/errors.hpp"

namespace matsplit {

// The prime field GF(p). Primality is checked once at construction;
// every arithmetic result is reduced into [0, p).
class PrimeField {
  public:
    explicit PrimeField(int p);

    int order() const { return p_; }

    int add(int x, int y) const { return (x + y) % p_; }
    int sub(int x, int y) const { return (x - y % p_ + p_) % p_; }
    int mul(int x, int y) const {
        return static_cast<int>(static_cast<std::int64_t>(x) * y % p_);
    }
    int neg(int x) const { return (p_ - x % p_) % p_; }
    int inv(int x) const;  // throws DivisionByZero on x == 0

    // Reduce an arbitrary integer into [0, p).
    int reduce(std::int64_t x) const {
        int r = static_cast<int>(x % p_);
        return r < 0 ? r + p_ : r;
    }

    bool operator==(const PrimeField&) const = default;

  private:
    int p_;
};

bool is_prime(int n);

// A field element tagged with its modulus, for API boundaries where two
// values must provably live in the same field.
struct Scalar {
    int value;
    int p;

    Scalar(int v, const PrimeField& f) : value(f.reduce(v)), p(f.order()) {}
    PrimeField field() const { return PrimeField(p); }
    bool operator==(const Scalar&) const = default;
};

Scalar add(Scalar x, Scalar y);
Scalar sub(Scalar x, Scalar y);
Scalar mul(Scalar x, Scalar y);
Scalar neg(Scalar x);
Scalar inv(Scalar x);

}  // namespace matsplit
