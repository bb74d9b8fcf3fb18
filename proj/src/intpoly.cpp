#include "gjcluster/intpoly.hpp"

#include <sstream>

namespace gjc {

IntPoly::IntPoly(const BigInt& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

IntPoly IntPoly::monomial(BigInt coeff, std::size_t power) {
    IntPoly p;
    if (coeff != 0) {
        p.coeffs_.assign(power + 1, BigInt(0));
        p.coeffs_[power] = std::move(coeff);
    }
    return p;
}

IntPoly IntPoly::from_coeffs(std::vector<BigInt> ascending) {
    IntPoly p;
    p.coeffs_ = std::move(ascending);
    p.normalize();
    return p;
}

const BigInt& IntPoly::coeff(std::size_t power) const {
    static const BigInt zero(0);
    return power < coeffs_.size() ? coeffs_[power] : zero;
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::compose(const IntPoly& q) const {
    IntPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * q + IntPoly(*it);
    return acc;
}

IntPoly IntPoly::operator-() const {
    IntPoly out;
    out.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.coeffs_.push_back(-c);
    return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return IntPoly();
    std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPoly::from_coeffs(std::move(out));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str();
            out << "t";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

}  // namespace gjc
