#include "mplt/qlaurent.hpp"

namespace mplt {

namespace {

void add_term(std::map<Rational, Rational>& t, const Rational& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

}  // namespace

QLaurent QLaurent::monomial(const Rational& exponent, const Rational& coeff) {
    QLaurent p;
    add_term(p.terms, exponent, coeff);
    return p;
}

QLaurent QLaurent::antisym(const Rational& n) {
    QLaurent p;
    add_term(p.terms, n / 2, 1);
    add_term(p.terms, -n / 2, -1);
    return p;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms) add_term(terms, e, c);
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms) add_term(terms, e, -c);
    return *this;
}

QLaurent& QLaurent::operator*=(const Rational& s) {
    if (s == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [e, c] : terms) c *= s;
    return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent p;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) add_term(p.terms, ea + eb, ca * cb);
    return p;
}

QLaurent QLaurent::divide_antisym(const Rational& c) const {
    if (c <= 0) throw Error("domain", "divide_antisym needs c > 0");
    QLaurent rem = *this, quot;
    if (rem.is_zero()) return quot;
    const Rational floor = rem.terms.begin()->first;
    while (!rem.is_zero()) {
        auto top = std::prev(rem.terms.end());
        Rational e = top->first, a = top->second;
        if (e - 2 * c < floor) throw Error("not-divisible", "Laurent division left a remainder");
        add_term(quot.terms, e - c, a);
        add_term(rem.terms, e, -a);
        add_term(rem.terms, e - 2 * c, a);
    }
    return quot;
}

Rational QLaurent::at_one() const {
    Rational s = 0;
    for (const auto& [e, c] : terms) s += c;
    return s;
}

QLaurent quantum_integer(const Rational& n) {
    if (n == 0) return {};
    QLaurent p = QLaurent::antisym(abs_of(n)).divide_antisym(Rational(1, 2));
    if (n < 0) p *= -1;
    return p;
}

std::string to_string(const QLaurent& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        Rational a = abs_of(c);
        if (e == 0) {
            s += to_string(a);
            continue;
        }
        if (a != 1) s += to_string(a) + "*";
        s += "q^" + (is_integer(e) ? to_string(e) : "(" + to_string(e) + ")");
    }
    return s;
}

}  // namespace mplt
