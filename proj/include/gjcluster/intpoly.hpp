#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gjcluster/base.hpp"

namespace gjc {

// Polynomial in one variable t with exact integer coefficients, stored dense
// in ascending powers with no trailing zeros; the zero polynomial is the
// empty list.
class IntPoly {
public:
    IntPoly() = default;                       // zero
    IntPoly(const BigInt& constant);           // NOLINT: implicit by design
    IntPoly(long long constant) : IntPoly(BigInt(constant)) {}

    static IntPoly t() { return monomial(1, 1); }
    static IntPoly monomial(BigInt coeff, std::size_t power);
    static IntPoly from_coeffs(std::vector<BigInt> ascending);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as 0.
    std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const BigInt& coeff(std::size_t power) const;
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    BigInt eval(const BigInt& x) const;
    // Substitution p(q(t)), exact.
    IntPoly compose(const IntPoly& q) const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    bool operator==(const IntPoly& other) const { return coeffs_ == other.coeffs_; }

    // "0", "t", "2t^3 + t^4", "1 - t^2", ... in ascending powers.
    std::string to_string() const;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

}  // namespace gjc
