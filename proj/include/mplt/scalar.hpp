#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mplt {

using Rational = mpq_class;
using BigInt = mpz_class;

// Thrown for every contract violation the caller can act on.
struct Error : std::runtime_error {
    std::string kind;
    Error(std::string k, const std::string& what) : std::runtime_error(what), kind(std::move(k)) {}
};

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);
// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);

// p/q in lowest terms; the two-argument mpq_class constructor does not reduce.
inline Rational frac(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }
BigInt floor_of(const Rational& q);
Rational abs_of(const Rational& q);

// Coordinate vector. Weights, roots and coweights all live here, in the
// fundamental-weight chart of the ambient root system.
struct Weight {
    std::vector<Rational> c;

    Weight() = default;
    explicit Weight(std::size_t n) : c(n) {}
    Weight(std::initializer_list<Rational> xs) : c(xs) {}
    explicit Weight(std::vector<Rational> xs) : c(std::move(xs)) {}
    static Weight from_ints(const std::vector<int>& xs);

    std::size_t size() const { return c.size(); }
    Rational& operator[](std::size_t i) { return c[i]; }
    const Rational& operator[](std::size_t i) const { return c[i]; }

    bool is_zero() const;
    bool is_integral() const;

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    Weight& operator*=(const Rational& s);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(Weight a, const Rational& s) { return a *= s; }
    friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
    friend Weight operator-(Weight a) { return a *= Rational(-1); }

    friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }
};

std::string to_string(const Weight& w);

}  // namespace mplt
