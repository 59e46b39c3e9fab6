#include "matsplit/gf.hpp"

namespace matsplit {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<std::int64_t>(d) * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(int p) : p_(p) {
    if (!is_prime(p)) {
        throw ValidationError("field order " + std::to_string(p) + " is not prime");
    }
}

int PrimeField::inv(int x) const {
    x = reduce(x);
    if (x == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(p_) + ")");
    // Fermat: x^(p-2) mod p.
    std::int64_t base = x, acc = 1;
    int e = p_ - 2;
    while (e > 0) {
        if (e & 1) acc = acc * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<int>(acc);
}

namespace {
void require_same_field(Scalar x, Scalar y) {
    if (x.p != y.p) {
        throw FieldMismatch("operands live in GF(" + std::to_string(x.p) + ") and GF(" +
                            std::to_string(y.p) + ")");
    }
}
}  // namespace

Scalar add(Scalar x, Scalar y) {
    require_same_field(x, y);
    return {x.field().add(x.value, y.value), x.field()};
}

Scalar sub(Scalar x, Scalar y) {
    require_same_field(x, y);
    return {x.field().sub(x.value, y.value), x.field()};
}

Scalar mul(Scalar x, Scalar y) {
    require_same_field(x, y);
    return {x.field().mul(x.value, y.value), x.field()};
}

Scalar neg(Scalar x) { return {x.field().neg(x.value), x.field()}; }

Scalar inv(Scalar x) { return {x.field().inv(x.value), x.field()}; }

}  // namespace matsplit
