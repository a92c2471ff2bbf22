#pragma once

#include "mplt/pairs.hpp"

namespace mplt {

// Inner automorphism of type (s_0, ..., s_n; 1), order m = sum a_i s_i.
struct AutType {
    std::vector<int> s;
    int m = 1;
    bool is_identity() const;
};

std::string to_string(const AutType& a);
AutType make_aut(const RootSystem& rs, std::vector<int> s);
AutType identity_aut(const RootSystem& rs);
// All (s;1) with gcd 1 and order <= max_m.
std::vector<AutType> inner_auts(const RootSystem& rs, int max_m);

// sum_i c_i s_i for alpha = sum c_i eta_i; lies in [-m, m].
int raw_grade(const RootSystem& rs, const AutType& aut, const Weight& root);
int grade(const RootSystem& rs, const AutType& aut, const Weight& root);   // residue in [0, m)

struct EigenData {
    std::vector<int> dims;                 // dim g^{j}, j = 0..m-1
    std::map<Weight, int> root_grade;
};

EigenData eigenspace_dims(const RootSystem& rs, const AutType& aut);
// Grades of a root subset plus `cartan` dimensions of grade 0.
EigenData eigenspace_dims(const RootSystem& rs, const AutType& aut, const std::vector<Weight>& roots,
                          int cartan);

// Grade-0 positive roots: generated by the affine simple roots of grade 0.
bool in_positive_grade0(const RootSystem& rs, const AutType& aut, const Weight& root);

// sum_{0 <= j < 1/2} (1 - 2j) rho_j over the given roots.
Weight rho_sigma_of(const RootSystem& rs, const AutType& aut, const std::vector<Weight>& roots);
Weight rho_sigma(const RootSystem& rs, const AutType& aut);
Weight rho_a_sigma(const Pair& pair, const AutType& aut);

Rational z_const(const EigenData& e);
// z(a_S, sigma) for each entry of pair.factors (0 on the center).
std::vector<Rational> z_factors(const Pair& pair, const AutType& aut);

// kappa(lambda_s, eta_i) = s_i / 2m; needs the Killing normalization.
Weight lambda_s(const RootSystem& rs, const AutType& aut);

Rational verify_vsf(const RootSystem& rs, const AutType& aut);
Rational verify_masterrho(const Pair& pair, const AutType& aut);
// (Lambda + rho_sigma) must vanish on the orthogonal complement of span(Delta_a).
Rational verify_masternok(const Pair& pair, const AutType& aut, const Weight& lambda, const Rational& k);
Rational central_charge(const Pair& pair, const Rational& k);

// 2(rho_sigma, abar_i) - (alpha_i, alpha_i) + 2 g s_i / m for i = 0..n; all zero when the
// affine Weyl vector relation holds.
std::vector<Rational> rhoalfai_residuals(const RootSystem& rs, const AutType& aut);

}  // namespace mplt
