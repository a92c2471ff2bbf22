#pragma once

#include "mplt/affine.hpp"

#include <mpfr.h>

namespace mplt {

// Owning wrapper over mpfr_t; round-to-nearest everywhere.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 256);
    BigFloat(const Rational& q, mpfr_prec_t prec);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat abs() const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // log2 |x|; -inf for zero.
    double log2_abs() const;
    std::string to_string(int digits = 20) const;

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

private:
    mpfr_t v_;
    bool live_ = true;
};

// sin(pi q), with q reduced exactly modulo 2 first.
BigFloat sin_pi(const Rational& q, mpfr_prec_t prec);

// prod over positive roots of the factor of sin(pi (Lambda_bar + rho_S, alpha) / (k + g_S)),
// in the ambient form. The center gives exactly 1.
BigFloat asdim_irrep(const Pair& pair, std::size_t factor, const Weight& lambda_bar, const Rational& k,
                     mpfr_prec_t prec = 256);

struct AsdimSum {
    BigFloat sum;
    BigFloat max_term;
    std::size_t terms = 0;
    bool closed = false;
};

// Signed sum of asymptotic dimensions over the finite set of minimal representatives.
// Needs semisimple a and sigma = id.
AsdimSum signed_asdim_sum(const AffinePairContext& ctx, const AffineWeight& lambda, int max_length,
                          mpfr_prec_t prec = 256);

}  // namespace mplt
