#include "mplt/scalar.hpp"

#include <cctype>

namespace mplt {

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw Error("parse", "not a rational literal: '" + std::string(text) + "'");
    BigInt n(num), d(den);
    if (d == 0) throw Error("parse", "zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

BigInt floor_of(const Rational& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational abs_of(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Weight Weight::from_ints(const std::vector<int>& xs) {
    Weight w(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) w.c[i] = xs[i];
    return w;
}

bool Weight::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

bool Weight::is_integral() const {
    for (const auto& x : c)
        if (!is_integer(x)) return false;
    return true;
}

Weight& Weight::operator+=(const Weight& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
}

Weight& Weight::operator*=(const Rational& s) {
    for (auto& x : c) x *= s;
    return *this;
}

std::string to_string(const Weight& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += w[i].get_str();
    }
    return out + ")";
}

}  // namespace mplt
