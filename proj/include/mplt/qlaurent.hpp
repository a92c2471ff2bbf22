#pragma once

#include "mplt/scalar.hpp"

#include <map>
#include <string>

namespace mplt {

// Finite sum of c * q^e with rational exponents.
struct QLaurent {
    std::map<Rational, Rational> terms;

    QLaurent() = default;
    static QLaurent monomial(const Rational& exponent, const Rational& coeff = 1);
    // q^{n/2} - q^{-n/2}
    static QLaurent antisym(const Rational& n);

    bool is_zero() const { return terms.empty(); }
    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    QLaurent& operator*=(const Rational& s);
    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
    friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms == b.terms; }

    // Exact division by q^{c} - q^{-c}, c > 0; throws when not divisible.
    QLaurent divide_antisym(const Rational& c) const;
    // Value at q = 1.
    Rational at_one() const;
};

// [n]_q = (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2})
QLaurent quantum_integer(const Rational& n);

std::string to_string(const QLaurent& p);

}  // namespace mplt
