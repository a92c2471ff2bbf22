#pragma once

#include "mplt/twisted.hpp"

namespace mplt {

// lambda_bar + level * Lambda_0 + delta * delta
struct AffineWeight {
    Weight fin;
    Rational level;
    Rational delta;

    AffineWeight() = default;
    AffineWeight(Weight f, Rational k, Rational x) : fin(std::move(f)), level(std::move(k)), delta(std::move(x)) {}

    AffineWeight& operator+=(const AffineWeight& o);
    AffineWeight& operator-=(const AffineWeight& o);
    AffineWeight& operator*=(const Rational& s);
    friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
    friend AffineWeight operator-(AffineWeight a, const AffineWeight& b) { return a -= b; }
    friend AffineWeight operator*(AffineWeight a, const Rational& s) { return a *= s; }
    friend bool operator==(const AffineWeight& a, const AffineWeight& b) {
        return a.delta == b.delta && a.level == b.level && a.fin == b.fin;
    }
    friend bool operator<(const AffineWeight& a, const AffineWeight& b) {
        if (a.delta != b.delta) return a.delta > b.delta;    // shallow first
        if (a.level != b.level) return a.level < b.level;
        return a.fin < b.fin;
    }
};

std::string to_string(const AffineWeight& w);

// s delta + fin; imaginary when fin = 0.
struct AffineRoot {
    Rational s;
    Weight fin;
    int mult = 1;
    bool real() const { return !fin.is_zero(); }
    AffineWeight weight() const { return {fin, 0, s}; }
    friend bool operator<(const AffineRoot& a, const AffineRoot& b) {
        if (a.s != b.s) return a.s < b.s;
        return a.fin < b.fin;
    }
    friend bool operator==(const AffineRoot& a, const AffineRoot& b) { return a.s == b.s && a.fin == b.fin; }
};

struct AffineSystem {
    RootSystemPtr rs;
    AutType aut;
    std::vector<AffineRoot> simple;    // beta_0 = (s_0/m) delta - theta, beta_i = (s_i/m) delta + eta_i
    AffineWeight rho_hat;              // rho_sigma + g Lambda_0

    const RootSystem& g() const { return *rs; }
    Rational form(const AffineWeight& a, const AffineWeight& b) const;
    Rational norm2(const AffineWeight& a) const { return form(a, a); }
    bool is_positive(const AffineRoot& a) const;
    // 2 (lambda, beta) / (beta, beta)
    Rational coroot_pairing(const AffineWeight& lambda, const AffineRoot& beta) const;
    bool is_dominant_integral(const AffineWeight& lambda) const;
    // Positive roots with delta coefficient <= depth (imaginary roots carry multiplicity rank g).
    std::vector<AffineRoot> positive_roots(const Rational& depth) const;
};

AffineSystem build_affine(RootSystemPtr rs, const AutType& aut);
AffineWeight reflect_affine(const AffineSystem& sys, const AffineWeight& lambda, const AffineRoot& alpha);

struct AffinePairContext {
    const Pair* pair = nullptr;
    AffineSystem sys;
    Weight rho_a_sigma;
    std::vector<Rational> z;                 // z(a_S, sigma) per factor
    std::vector<AffineRoot> a_simple;        // simple roots of the a-side affine system
    std::vector<int> a_simple_factor;        // factor index of each a-simple root

    const RootSystem& g() const { return sys.g(); }
    bool a_root(const AffineRoot& r) const { return r.real() ? pair->contains(r.fin) : true; }
};

AffinePairContext make_context(const Pair& pair, const AutType& aut);
// The context keeps a pointer to the pair.
AffinePairContext make_context(const Pair&&, const AutType&) = delete;

struct CosetEnumeration {
    std::vector<WeylWord> reps;
    std::vector<AffineWeight> keys;    // w(rho_hat)
    bool closed = false;
};

// Minimal right coset representatives of W_a-hat in W-hat up to length max_length. Closed
// iff no representative of length max_length + 1 exists.
CosetEnumeration enumerate_coset_reps(const AffinePairContext& ctx, int max_length);
// Every representative with depth of w(Lambda + rho_hat) at most `depth`; exact.
CosetEnumeration enumerate_coset_reps_depth(const AffinePairContext& ctx, const AffineWeight& lambda,
                                            const Rational& depth, int length_cap = 200);

AffineWeight apply_word(const AffineSystem& sys, const WeylWord& w, const AffineWeight& lambda);

struct AffineMember {
    WeylWord rep;
    int sign = 1;
    AffineWeight nu;                     // w(Lambda + rho_hat)
    Weight mu_fin;                       // nu_bar - rho_a_sigma
    std::vector<Rational> mu_levels;     // per factor: k + g - g_S
    Rational mu_delta;
};

struct AffineMultiplet {
    std::vector<AffineMember> entries;
    bool closed = false;
};

AffineMultiplet affine_multiplet(const AffinePairContext& ctx, const AffineWeight& lambda, int max_length);
bool member_dominant(const AffinePairContext& ctx, const AffineMember& m);
Rational casimir_scalar(const AffinePairContext& ctx, const AffineWeight& lambda);
Rational member_casimir(const AffinePairContext& ctx, const AffineMember& m);

using AffineCharacter = std::map<AffineWeight, BigInt>;

// Weights rho_hat_sigma - S of the spin module on p, to delta-depth `depth`. With
// include_center the Cartan modes of the center of a are counted too: ceil(c/2) zero modes
// and c modes at each positive integer depth. `signed_` gives F+ - F- instead of F+ + F-.
AffineCharacter spin_weights(const AffinePairContext& ctx, const Rational& depth, bool include_center = true,
                             bool signed_ = false);
// The fermionic modes behind spin_weights: root beta with multiplicity.
std::vector<AffineRoot> spin_modes(const AffinePairContext& ctx, const Rational& depth, bool include_center);

struct TruncatedCharacter {
    Rational top;       // delta coefficient of the leading weight
    Rational cutoff;    // keep terms with top - delta <= cutoff
    AffineCharacter terms;

    Rational depth_of(const AffineWeight& w) const { return top - w.delta; }
    void add(const AffineWeight& w, const BigInt& c);
    TruncatedCharacter& operator+=(const TruncatedCharacter& o);
    friend bool operator==(const TruncatedCharacter& a, const TruncatedCharacter& b) { return a.terms == b.terms; }
};

TruncatedCharacter product(const TruncatedCharacter& a, const TruncatedCharacter& b, const Rational& top,
                           const Rational& cutoff);

// ch L(Lambda) to the given depth, via the Weyl-Kac numerator over the truncated denominator.
TruncatedCharacter truncated_char(const AffineSystem& sys, const AffineWeight& lambda, const Rational& depth);

struct HwkReport {
    bool ok = false;
    bool closed = true;
    std::size_t representatives = 0;
    TruncatedCharacter lhs;
    TruncatedCharacter rhs;
    AffineCharacter diff;
};
HwkReport verify_hwk(const AffinePairContext& ctx, const AffineWeight& lambda, const Rational& depth);

}  // namespace mplt
