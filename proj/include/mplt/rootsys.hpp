#pragma once

#include "mplt/scalar.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace mplt {

enum class Normalization { ThetaSquaredTwo, Killing };

std::string to_string(Normalization n);
Normalization parse_normalization(std::string_view s);

struct RootSystem {
    char type = 'A';
    int rank = 0;
    Normalization normalization = Normalization::ThetaSquaredTwo;

    // cartan[i][j] = <alpha_i, alpha_j^vee>; row i is alpha_i in fundamental coordinates.
    std::vector<std::vector<int>> cartan;
    std::vector<Rational> simple_norm;            // (alpha_i, alpha_i)
    std::vector<std::vector<Rational>> gram;      // (omega_i, omega_j)
    std::vector<std::vector<Rational>> cartan_inv;

    std::vector<Weight> simple;                   // eta_1..eta_n
    std::vector<Weight> roots;                    // lexicographic in fundamental coordinates
    std::vector<Weight> positive;                 // by height, then lexicographic
    std::map<Weight, std::vector<int>> simple_coords_of;

    Weight rho;
    Weight theta;
    std::vector<int> marks;                       // a_0 = 1, a_1..a_n
    Rational g;                                   // (rho, theta) + (theta, theta)/2
    int dim = 0;

    std::string label() const { return std::string(1, type) + std::to_string(rank); }
    Rational form(const Weight& a, const Weight& b) const;
    Rational norm2(const Weight& a) const { return form(a, a); }
    // <lambda, alpha^vee> = 2 (lambda, alpha) / (alpha, alpha)
    Rational coroot_pairing(const Weight& lambda, const Weight& alpha) const;
    Weight reflect(const Weight& lambda, const Weight& alpha) const;
    // Simple reflection: in this chart s_i(lambda) = lambda - lambda_i alpha_i.
    Weight reflect_simple(const Weight& lambda, int i) const;

    bool is_root(const Weight& w) const { return simple_coords_of.count(w) > 0; }
    bool is_positive_root(const Weight& w) const;
    const std::vector<int>& simple_coords(const Weight& root) const;
    int height(const Weight& root) const;
    // Expansion of an arbitrary weight in simple roots (rational).
    std::vector<Rational> to_simple_basis(const Weight& lambda) const;
    bool is_dominant_integral(const Weight& lambda) const;

    // alpha^vee as an element of h* under the form: 2 alpha / (alpha, alpha).
    Weight coroot(const Weight& alpha) const;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystemPtr build_root_system(char type, int rank,
                                Normalization n = Normalization::ThetaSquaredTwo);
RootSystemPtr build_root_system(const std::string& label,
                                Normalization n = Normalization::ThetaSquaredTwo);

// |W| from the classical order formulas.
BigInt weyl_group_order(const RootSystem& rs);

// w = s_{letters[0]} s_{letters[1]} ... ; acts right-to-left.
struct WeylWord {
    std::vector<int> letters;
    std::size_t length() const { return letters.size(); }
    Weight apply(const RootSystem& rs, const Weight& lambda) const;
    Weight apply_inverse(const RootSystem& rs, const Weight& lambda) const;
    friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

// letters are printed as s<letter + base>; base 1 gives Bourbaki labels for finite words
std::string to_string(const WeylWord& w, int base = 1);
// Number of positive roots sent to negative roots.
int inversion_count(const RootSystem& rs, const WeylWord& w);

// A reflection subsystem inside the ambient chart: simple roots, positive roots, rho.
struct SubSystem {
    const RootSystem* ambient = nullptr;
    std::vector<Weight> simple;
    std::vector<Weight> positive;
    std::vector<int> heights;     // height of each positive root in `simple`
    Weight rho;

    static SubSystem full(const RootSystem& rs);
    static SubSystem from_positive(const RootSystem& rs, std::vector<Weight> simple,
                                   std::vector<Weight> positive);
    bool is_dominant_integral(const Weight& lambda) const;
    // Conjugates lambda into the dominant chamber; returns parity of the reflections used.
    Weight to_dominant(Weight lambda, int* parity = nullptr) const;
};

using Character = std::map<Weight, BigInt>;

BigInt weyl_dim(const RootSystem& rs, const Weight& lambda);
BigInt weyl_dim(const SubSystem& sub, const Weight& lambda);
Character dominant_character(const RootSystem& rs, const Weight& lambda);
Character dominant_character(const SubSystem& sub, const Weight& lambda);

Character multiply(const Character& a, const Character& b);
void accumulate(Character& into, const Character& x, const BigInt& coeff);
BigInt total_multiplicity(const Character& ch);

// Dominant integral weights with Dynkin-label sum <= h.
std::vector<Weight> dominant_weights_up_to_height(const RootSystem& rs, int h);

}  // namespace mplt
