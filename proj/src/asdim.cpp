#include "mplt/asdim.hpp"

#include <cmath>
#include <limits>

namespace mplt {

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const Rational& q, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    v_[0] = o.v_[0];
    o.live_ = false;
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) {
        std::swap(v_[0], o.v_[0]);
        std::swap(live_, o.live_);
    }
    return *this;
}

BigFloat::~BigFloat() {
    if (live_) mpfr_clear(v_);
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

double BigFloat::log2_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    BigFloat t(64);
    mpfr_abs(t.v_, v_, MPFR_RNDN);
    mpfr_log2(t.v_, t.v_, MPFR_RNDN);
    return t.to_double();
}

std::string BigFloat::to_string(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

BigFloat sin_pi(const Rational& q, mpfr_prec_t prec) {
    Rational r = q - 2 * Rational(floor_of(q / 2));    // [0, 2)
    if (r == 0 || r == 1) return BigFloat(prec);
    BigFloat x(r, prec + 32), pi(prec + 32);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    x *= pi;
    mpfr_sin(x.get(), x.get(), MPFR_RNDN);
    BigFloat out(prec);
    mpfr_set(out.get(), x.get(), MPFR_RNDN);
    return out;
}

BigFloat asdim_irrep(const Pair& pair, std::size_t factor, const Weight& lambda_bar, const Rational& k,
                     mpfr_prec_t prec) {
    const RootSystem& rs = pair.g();
    const Factor& f = pair.factors.at(factor);
    if (f.torus) return BigFloat(Rational(1), prec);
    Rational kg = k + f.g;
    if (kg <= 0) throw Error("domain", "k + g_S must be positive");
    for (const auto& a : f.simple) {
        Rational p = rs.coroot_pairing(lambda_bar, a);
        if (!is_integer(p) || p < 0)
            throw Error("non-dominant", "weight is not dominant for " + f.label + ": " + to_string(lambda_bar));
    }
    BigFloat prod(Rational(1), prec);
    Weight lr = lambda_bar + f.rho;
    for (const auto& a : f.positive) prod *= sin_pi(rs.form(lr, a) / kg, prec);
    return prod;
}

AsdimSum signed_asdim_sum(const AffinePairContext& ctx, const AffineWeight& lambda, int max_length,
                          mpfr_prec_t prec) {
    const Pair& pair = *ctx.pair;
    if (!pair.proper()) throw Error("improper-pair", "a = g: the signed sum identity does not apply");
    if (!pair.semisimple())
        throw Error("inapplicable", "a has a center; the theta-function case is not implemented");
    if (!ctx.sys.aut.is_identity()) throw Error("inapplicable", "asymptotic dimensions are implemented for sigma = id");

    auto m = affine_multiplet(ctx, lambda, max_length);
    AsdimSum out{BigFloat(prec), BigFloat(prec), 0, m.closed};
    if (!m.closed) return out;
    for (const auto& e : m.entries) {
        BigFloat term(Rational(1), prec);
        for (std::size_t s = 0; s < pair.factors.size(); ++s)
            term *= asdim_irrep(pair, s, e.mu_fin, e.mu_levels[s], prec);
        if (out.max_term < term.abs()) out.max_term = term.abs();
        if (e.sign < 0) out.sum -= term;
        else out.sum += term;
        ++out.terms;
    }
    return out;
}

}  // namespace mplt
