#pragma once

#include "mplt/rootsys.hpp"

#include <optional>
#include <utility>

namespace mplt {

// A simple ideal of a, or its center (torus = true).
struct Factor {
    std::string label;
    bool torus = false;
    int rank = 0;
    int dim = 0;
    Rational g;                  // (rho_S, theta_S) + (theta_S, theta_S)/2; 0 on the center
    std::vector<Weight> simple;
    std::vector<Weight> positive;
    std::vector<Weight> roots;
    Weight rho;
    Weight theta;
};

struct Pair {
    RootSystemPtr ambient;
    std::vector<Weight> sub_roots;       // Delta_a, ambient order
    std::vector<Weight> sub_positive;    // Delta_a^+ = Delta_a cap Delta^+
    std::vector<Weight> sub_simple;      // canonical simple system
    std::vector<Weight> p_roots;
    std::vector<Weight> p_positive;
    std::vector<Factor> factors;         // simple ideals first, then the center if nonzero
    int center_dim = 0;
    Weight rho_a;
    Weight rho_p;
    Weight rho_vee_a;                    // half sum of positive a-coroots, as an element of h*
    std::optional<Weight> r_vee;
    std::string r_vee_error;

    const RootSystem& g() const { return *ambient; }
    bool proper() const { return !p_roots.empty(); }
    bool semisimple() const { return center_dim == 0; }
    bool contains(const Weight& root) const;
    // Index into `factors` of the simple ideal containing an a-root.
    int factor_of(const Weight& root) const;
    SubSystem sub() const;
    std::string label() const;
};

Pair pair_from_roots(RootSystemPtr rs, std::vector<Weight> roots);
Pair pair_from_simple_coords(RootSystemPtr rs, const std::vector<std::vector<int>>& roots);
Pair full_pair(RootSystemPtr rs);
// Each step removes one node of the current extended diagram. Nodes are numbered
// lowest roots -theta_C first (one per simple ideal), then the current simple roots;
// on the first step this is the usual 0 = -theta, i = eta_i.
Pair borel_de_siebenthal(RootSystemPtr rs, const std::vector<int>& steps);
std::vector<Weight> extended_nodes(const Pair& p);

// Basis of the orthogonal complement of span(Delta_a): the center of a.
std::vector<Weight> center_basis(const Pair& p);
Weight choose_r_vee(const Pair& p);

struct SpinCharacters {
    Character plus;
    Character minus;
};
SpinCharacters spin_characters_fin(const Pair& p);

// [Delta_p + Delta_p] cap Delta inside Delta_a.
bool is_symmetric_pair(const Pair& p);

// Identifies a connected root system from its roots: "A3", "B4", "G2", ...
std::string classify_component(const RootSystem& rs, const std::vector<Weight>& roots, int rank);

// Every closed equal-rank subsystem reachable by Borel-de Siebenthal steps followed by
// a choice of a subset of simple roots; deduplicated up to the Weyl group of g.
std::vector<Pair> equal_rank_pairs(RootSystemPtr rs, bool include_full = false);

}  // namespace mplt
