#pragma once

#include "mplt/pairs.hpp"
#include "mplt/qlaurent.hpp"

#include <optional>

namespace mplt {

struct MultipletEntry {
    WeylWord rep;
    Weight mu;        // w(lambda + rho) - rho_a
    int sign = 1;     // (-1)^l(w)
    BigInt dim;
    QLaurent qdim;
};

struct Multiplet {
    const Pair* pair = nullptr;
    Weight lambda;
    std::optional<Weight> r;    // point of q-specialization, when one exists
    std::vector<MultipletEntry> entries;
};

// One word per right coset W_a w, each of minimal length; BFS order (by length).
std::vector<WeylWord> minimal_coset_reps(const Pair& pair);

// q-dimension of the a-module with highest weight mu, specialized at e^r.
QLaurent qdim_a(const Pair& pair, const Weight& mu, const Weight& r);
// Throws unless alpha(r) = 1 on every simple a-root.
void check_r(const Pair& pair, const Weight& r);

Multiplet multiplet(const Pair& pair, const Weight& lambda);

BigInt signed_dim_sum(const Multiplet& m);
QLaurent signed_qdim_sum(const Multiplet& m, const Weight& r);

// Non-minimal representatives: w(lambda + rho) is moved into the a-dominant chamber by
// v in W_a, with sign (-1)^{l(w) + l(v)}. Returns nullopt when the weight is a-singular.
struct SignedWeight {
    Weight mu;
    int sign;
};
std::optional<SignedWeight> normalize_member(const Pair& pair, const WeylWord& w, const Weight& lambda);

struct GkrsReport {
    bool ok = true;
    Character lhs;
    Character rhs;
    Character diff;    // lhs - rhs, nonzero entries only
};
GkrsReport verify_gkrs(const Pair& pair, const Weight& lambda);

}  // namespace mplt
