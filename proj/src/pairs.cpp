#include "mplt/pairs.hpp"

#include "mplt/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mplt {

namespace {

std::vector<Weight> reflection_closure(const RootSystem& rs, const std::vector<Weight>& gens) {
    std::vector<Weight> out;
    std::set<Weight> seen;
    for (const auto& g : gens)
        if (seen.insert(g).second) out.push_back(g);
    for (std::size_t q = 0; q < out.size(); ++q)
        for (const auto& g : gens) {
            Weight r = rs.reflect(out[q], g);
            if (seen.insert(r).second) out.push_back(r);
        }
    return out;
}

// Height of a root of a connected subsystem with respect to that subsystem's simple roots.
int sub_height(const RootSystem& rs, const Weight& a, const Weight& rho_vee) {
    Rational h = rs.form(a, rho_vee);
    return static_cast<int>(h.get_num().get_si());
}

}  // namespace

bool Pair::contains(const Weight& root) const {
    return std::binary_search(sub_roots.begin(), sub_roots.end(), root);
}

int Pair::factor_of(const Weight& root) const {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].torus) continue;
        if (std::binary_search(factors[i].roots.begin(), factors[i].roots.end(), root))
            return static_cast<int>(i);
    }
    throw Error("not-an-a-root", "root does not belong to a: " + to_string(root));
}

SubSystem Pair::sub() const { return SubSystem::from_positive(*ambient, sub_simple, sub_positive); }

std::string Pair::label() const {
    std::string s = ambient->label() + ">";
    if (factors.empty()) return s + "0";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "+";
        s += factors[i].label;
    }
    return s;
}

std::string classify_component(const RootSystem& rs, const std::vector<Weight>& roots, int r) {
    const std::size_t n = roots.size();
    std::set<Rational> lengths;
    Rational longest = 0;
    for (const auto& a : roots) {
        Rational l = rs.norm2(a);
        lengths.insert(l);
        longest = std::max(longest, l);
    }
    std::size_t nlong = 0;
    for (const auto& a : roots)
        if (rs.norm2(a) == longest) ++nlong;
    auto R = static_cast<std::size_t>(r);
    if (lengths.size() == 1) {
        if (n == R * (R + 1)) return "A" + std::to_string(r);
        if (n == 2 * R * (R - 1)) return "D" + std::to_string(r);
        if (n == 72) return "E6";
        if (n == 126) return "E7";
        if (n == 240) return "E8";
    } else {
        if (n == 12 && r == 2) return "G2";
        if (n == 48 && r == 4) return "F4";
        if (r == 2) return "B2";
        if (nlong == 2 * R * (R - 1)) return "B" + std::to_string(r);
        return "C" + std::to_string(r);
    }
    return "?" + std::to_string(r);
}

Pair pair_from_roots(RootSystemPtr rsp, std::vector<Weight> roots) {
    const RootSystem& rs = *rsp;
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    std::set<Weight> in(roots.begin(), roots.end());
    for (const auto& a : roots) {
        if (!rs.is_root(a)) throw Error("not-closed", "not a root of " + rs.label() + ": " + to_string(a));
        if (!in.count(-a)) throw Error("not-closed", "root list not symmetric at " + to_string(a));
    }
    for (const auto& a : roots)
        for (const auto& b : roots) {
            Weight s = a + b;
            if (rs.is_root(s) && !in.count(s))
                throw Error("not-closed", "root list not closed: " + to_string(a) + " + " + to_string(b));
        }

    Pair p;
    p.ambient = rsp;
    p.sub_roots = roots;
    for (const auto& a : rs.positive) {
        if (in.count(a)) p.sub_positive.push_back(a);
        else p.p_positive.push_back(a);
    }
    for (const auto& a : rs.roots)
        if (!in.count(a)) p.p_roots.push_back(a);
    std::set<Weight> pos(p.sub_positive.begin(), p.sub_positive.end());
    for (const auto& a : p.sub_positive) {
        bool decomposable = false;
        for (const auto& b : p.sub_positive)
            if (pos.count(a - b)) {
                decomposable = true;
                break;
            }
        if (!decomposable) p.sub_simple.push_back(a);
    }
    // Ambient simple roots keep their numbering: order by simple coordinates, descending.
    std::sort(p.sub_simple.begin(), p.sub_simple.end(), [&](const Weight& a, const Weight& b) {
        return rs.simple_coords(a) > rs.simple_coords(b);
    });

    const int n = rs.rank;
    p.rho_a = Weight(n);
    p.rho_p = Weight(n);
    p.rho_vee_a = Weight(n);
    for (const auto& a : p.sub_positive) {
        p.rho_a += a;
        p.rho_vee_a += rs.coroot(a);
    }
    for (const auto& a : p.p_positive) p.rho_p += a;
    p.rho_a *= Rational(1, 2);
    p.rho_p *= Rational(1, 2);
    p.rho_vee_a *= Rational(1, 2);

    // Simple ideals: connected components of the simple system.
    const std::size_t k = p.sub_simple.size();
    std::vector<int> comp(k, -1);
    int ncomp = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<std::size_t> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < k; ++v)
                if (comp[v] < 0 && rs.form(p.sub_simple[u], p.sub_simple[v]) != 0) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
        }
        ++ncomp;
    }
    int ss_rank = 0;
    for (int c = 0; c < ncomp; ++c) {
        Factor f;
        for (std::size_t i = 0; i < k; ++i)
            if (comp[i] == c) f.simple.push_back(p.sub_simple[i]);
        f.rank = static_cast<int>(f.simple.size());
        f.roots = reflection_closure(rs, f.simple);
        std::sort(f.roots.begin(), f.roots.end());
        for (const auto& a : p.sub_positive)
            if (std::binary_search(f.roots.begin(), f.roots.end(), a)) f.positive.push_back(a);
        f.dim = static_cast<int>(f.roots.size()) + f.rank;
        f.rho = Weight(n);
        Weight rv(n);
        for (const auto& a : f.positive) {
            f.rho += a;
            rv += rs.coroot(a);
        }
        f.rho *= Rational(1, 2);
        rv *= Rational(1, 2);
        f.theta = f.positive.front();
        for (const auto& a : f.positive)
            if (sub_height(rs, a, rv) > sub_height(rs, f.theta, rv)) f.theta = a;
        f.g = rs.form(f.rho, f.theta) + rs.norm2(f.theta) / 2;
        f.label = classify_component(rs, f.roots, f.rank);
        ss_rank += f.rank;
        p.factors.push_back(std::move(f));
    }
    p.center_dim = n - ss_rank;
    if (p.center_dim > 0) {
        Factor t;
        t.torus = true;
        t.rank = t.dim = p.center_dim;
        t.g = 0;
        t.rho = t.theta = Weight(n);
        t.label = "T" + std::to_string(p.center_dim);
        p.factors.push_back(std::move(t));
    }

    try {
        p.r_vee = choose_r_vee(p);
    } catch (const Error& e) {
        p.r_vee_error = e.what();
    }
    return p;
}

Pair pair_from_simple_coords(RootSystemPtr rs, const std::vector<std::vector<int>>& coords) {
    std::vector<Weight> roots;
    for (const auto& c : coords) {
        if (static_cast<int>(c.size()) != rs->rank)
            throw Error("parse", "root coordinate vector has wrong length");
        Weight w(rs->rank);
        for (int i = 0; i < rs->rank; ++i)
            for (int j = 0; j < rs->rank; ++j) w[i] += c[j] * rs->cartan[j][i];
        roots.push_back(w);
    }
    return pair_from_roots(std::move(rs), std::move(roots));
}

Pair full_pair(RootSystemPtr rs) {
    auto roots = rs->roots;
    return pair_from_roots(std::move(rs), std::move(roots));
}

std::vector<Weight> extended_nodes(const Pair& p) {
    std::vector<Weight> nodes;
    for (const auto& f : p.factors)
        if (!f.torus) nodes.push_back(-f.theta);
    for (const auto& a : p.sub_simple) nodes.push_back(a);
    return nodes;
}

Pair borel_de_siebenthal(RootSystemPtr rs, const std::vector<int>& steps) {
    Pair cur = full_pair(rs);
    for (int step : steps) {
        if (!cur.semisimple())
            throw Error("invalid-step", "extended-diagram steps need a semisimple subalgebra");
        auto nodes = extended_nodes(cur);
        if (step < 0 || step >= static_cast<int>(nodes.size()))
            throw Error("step-out-of-range", "node index " + std::to_string(step) + " out of range [0," +
                                                 std::to_string(nodes.size()) + ")");
        nodes.erase(nodes.begin() + step);
        cur = pair_from_roots(rs, reflection_closure(*rs, nodes));
    }
    return cur;
}

std::vector<Weight> center_basis(const Pair& p) {
    const RootSystem& rs = p.g();
    Matrix eqs;
    for (const auto& a : p.sub_simple) {
        std::vector<Rational> row(rs.rank);
        for (int j = 0; j < rs.rank; ++j)
            for (int i = 0; i < rs.rank; ++i) row[j] += a[i] * rs.gram[i][j];
        eqs.push_back(row);
    }
    if (eqs.empty()) eqs.push_back(std::vector<Rational>(rs.rank));
    std::vector<Weight> out;
    for (auto& v : nullspace(eqs, rs.rank)) out.emplace_back(std::move(v));
    return out;
}

Weight choose_r_vee(const Pair& p) {
    const RootSystem& rs = p.g();
    const Weight& r0 = p.rho_vee_a;
    if (p.p_roots.empty()) return r0;
    for (const auto& b : p.p_roots)
        if (is_integer(rs.form(b, r0))) return r0;

    // Move along the center of a.
    auto center = center_basis(p);
    if (center.empty())
        throw Error("search-failure", "rho_vee_a is not integral on Delta_p and a has trivial center");
    Weight h(center.front());
    // Make (beta, h) a primitive integer vector over the simple roots.
    std::vector<Rational> vals;
    for (const auto& a : rs.simple) vals.push_back(rs.form(a, h));
    auto prim = primitive_integral(vals);
    for (std::size_t i = 0; i < vals.size(); ++i)
        if (vals[i] != 0) {
            h *= prim[i] / vals[i];
            break;
        }

    BigInt bound = 1;
    for (int a : rs.marks) mpz_lcm_ui(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(a));
    bound *= 24;

    std::optional<Rational> best;
    for (const auto& b : p.p_roots) {
        Rational bh = rs.form(b, h);
        if (bh == 0) continue;
        Rational br = rs.form(b, r0);
        BigInt fl = floor_of(br);
        for (BigInt n : {fl, BigInt(fl + 1)}) {
            Rational t = (Rational(n) - br) / bh;
            if (BigInt(t.get_den()) > bound) continue;
            if (!best || abs_of(t) < abs_of(*best) || (abs_of(t) == abs_of(*best) && t > *best)) best = t;
        }
    }
    if (!best) throw Error("search-failure", "no admissible t within denominator bound " + bound.get_str());
    return r0 + h * *best;
}

SpinCharacters spin_characters_fin(const Pair& p) {
    if (p.p_roots.size() % 2 != 0) throw Error("odd-dim-p", "dim p is odd");
    SpinCharacters s;
    s.plus[p.rho_p] = 1;
    for (const auto& a : p.p_positive) {
        Character plus = s.plus, minus = s.minus;
        for (const auto& [w, m] : s.minus) plus[w - a] += m;
        for (const auto& [w, m] : s.plus) minus[w - a] += m;
        s.plus = std::move(plus);
        s.minus = std::move(minus);
    }
    return s;
}

bool is_symmetric_pair(const Pair& p) {
    const RootSystem& rs = p.g();
    for (const auto& a : p.p_roots)
        for (const auto& b : p.p_roots) {
            Weight s = a + b;
            if (rs.is_root(s) && !p.contains(s)) return false;
        }
    return true;
}

namespace {

// Weyl group as permutations of the ambient root list.
std::vector<std::vector<int>> weyl_permutations(const RootSystem& rs) {
    std::map<Weight, int> index;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) index[rs.roots[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> gens;
    for (int s = 0; s < rs.rank; ++s) {
        std::vector<int> g(rs.roots.size());
        for (std::size_t i = 0; i < rs.roots.size(); ++i) g[i] = index.at(rs.reflect_simple(rs.roots[i], s));
        gens.push_back(g);
    }
    std::vector<int> id(rs.roots.size());
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> seen{id};
    std::vector<std::vector<int>> all{id};
    for (std::size_t q = 0; q < all.size(); ++q)
        for (const auto& g : gens) {
            std::vector<int> c(id.size());
            for (std::size_t i = 0; i < id.size(); ++i) c[i] = g[all[q][i]];
            if (seen.insert(c).second) all.push_back(c);
        }
    return all;
}

}  // namespace

std::vector<Pair> equal_rank_pairs(RootSystemPtr rs, bool include_full) {
    std::map<Weight, int> index;
    for (std::size_t i = 0; i < rs->roots.size(); ++i) index[rs->roots[i]] = static_cast<int>(i);
    const bool conj = weyl_group_order(*rs) <= 51840;
    std::vector<std::vector<int>> perms;
    if (conj) perms = weyl_permutations(*rs);

    auto key_of = [&](const std::vector<Weight>& roots) {
        std::vector<int> ids;
        for (const auto& r : roots) ids.push_back(index.at(r));
        std::sort(ids.begin(), ids.end());
        if (!conj) return ids;
        std::vector<int> best = ids, img(ids.size());
        for (const auto& w : perms) {
            for (std::size_t i = 0; i < ids.size(); ++i) img[i] = w[ids[i]];
            std::sort(img.begin(), img.end());
            if (img < best) best = img;
        }
        return best;
    };

    // Semisimple subsystems through iterated extended-diagram steps.
    std::vector<Pair> semisimple{full_pair(rs)};
    std::set<std::vector<int>> ss_seen{key_of(rs->roots)};
    for (std::size_t q = 0; q < semisimple.size(); ++q) {
        auto nodes = extended_nodes(semisimple[q]);
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            auto rest = nodes;
            rest.erase(rest.begin() + static_cast<long>(k));
            auto roots = reflection_closure(*rs, rest);
            if (!ss_seen.insert(key_of(roots)).second) continue;
            semisimple.push_back(pair_from_roots(rs, roots));
        }
    }

    std::vector<Pair> out;
    std::set<std::vector<int>> seen;
    for (const auto& s : semisimple) {
        const std::size_t k = s.sub_simple.size();
        for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
            std::vector<Weight> gens;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1ul << i)) gens.push_back(s.sub_simple[i]);
            auto roots = reflection_closure(*rs, gens);
            if (!include_full && roots.size() == rs->roots.size()) continue;
            if (!seen.insert(key_of(roots)).second) continue;
            out.push_back(pair_from_roots(rs, roots));
        }
    }
    return out;
}

}  // namespace mplt
