#include "mplt/fin_multiplets.hpp"

#include <set>

namespace mplt {

std::vector<WeylWord> minimal_coset_reps(const Pair& pair) {
    const RootSystem& rs = pair.g();
    auto minimal = [&](const Weight& wrho) {
        for (const auto& g : pair.sub_simple)
            if (rs.form(g, wrho) <= 0) return false;
        return true;
    };
    // The set is closed under prefixes, so growing minimal words one letter at a time finds all.
    std::vector<WeylWord> reps{WeylWord{}};
    std::vector<Weight> keys{rs.rho};
    std::set<Weight> seen{rs.rho};
    for (std::size_t q = 0; q < reps.size(); ++q) {
        for (int i = 0; i < rs.rank; ++i) {
            // w s_i is longer iff w(alpha_i) > 0, i.e. (w rho, w alpha_i) > 0.
            Weight wa = reps[q].apply(rs, rs.simple[i]);
            if (!rs.is_positive_root(wa)) continue;
            Weight next = keys[q] - wa;
            if (!minimal(next) || !seen.insert(next).second) continue;
            WeylWord w = reps[q];
            w.letters.push_back(i);
            reps.push_back(std::move(w));
            keys.push_back(std::move(next));
        }
    }
    return reps;
}

void check_r(const Pair& pair, const Weight& r) {
    const RootSystem& rs = pair.g();
    for (const auto& g : pair.sub_simple)
        if (rs.form(g, r) != 1)
            throw Error("bad-r", "alpha(r) != 1 on simple a-root " + to_string(g));
}

QLaurent qdim_a(const Pair& pair, const Weight& mu, const Weight& r) {
    const RootSystem& rs = pair.g();
    QLaurent num = QLaurent::monomial(rs.form(mu, r - pair.rho_vee_a));
    Weight mr = mu + pair.rho_a;
    for (const auto& a : pair.sub_positive) num = num * QLaurent::antisym(rs.coroot_pairing(mr, a));
    for (const auto& a : pair.sub_positive) num = num.divide_antisym(rs.coroot_pairing(pair.rho_a, a) / 2);
    return num;
}

Multiplet multiplet(const Pair& pair, const Weight& lambda) {
    const RootSystem& rs = pair.g();
    if (!rs.is_dominant_integral(lambda))
        throw Error("non-dominant", "weight is not dominant integral: " + to_string(lambda));
    Multiplet m;
    m.pair = &pair;
    m.lambda = lambda;
    m.r = pair.r_vee;
    SubSystem sub = pair.sub();
    Weight lr = lambda + rs.rho;
    for (auto& w : minimal_coset_reps(pair)) {
        MultipletEntry e;
        e.mu = w.apply(rs, lr) - pair.rho_a;
        e.sign = w.length() % 2 ? -1 : 1;
        e.dim = weyl_dim(sub, e.mu);
        if (m.r) e.qdim = qdim_a(pair, e.mu, *m.r);
        e.rep = std::move(w);
        m.entries.push_back(std::move(e));
    }
    return m;
}

BigInt signed_dim_sum(const Multiplet& m) {
    if (!m.pair->proper()) throw Error("improper-pair", "a = g: the signed sum identity does not apply");
    BigInt s = 0;
    for (const auto& e : m.entries) s += e.sign * e.dim;
    return s;
}

QLaurent signed_qdim_sum(const Multiplet& m, const Weight& r) {
    if (!m.pair->proper()) throw Error("improper-pair", "a = g: the signed sum identity does not apply");
    check_r(*m.pair, r);
    QLaurent s;
    for (const auto& e : m.entries) {
        QLaurent q = qdim_a(*m.pair, e.mu, r);
        q *= e.sign;
        s += q;
    }
    return s;
}

std::optional<SignedWeight> normalize_member(const Pair& pair, const WeylWord& w, const Weight& lambda) {
    const RootSystem& rs = pair.g();
    SubSystem sub = pair.sub();
    int parity = 0;
    Weight nu = sub.to_dominant(w.apply(rs, lambda + rs.rho), &parity);
    for (const auto& g : pair.sub_simple)
        if (rs.form(nu, g) == 0) return std::nullopt;
    int sign = (inversion_count(rs, w) + parity) % 2 ? -1 : 1;
    return SignedWeight{nu - pair.rho_a, sign};
}

GkrsReport verify_gkrs(const Pair& pair, const Weight& lambda) {
    GkrsReport rep;
    auto spin = spin_characters_fin(pair);
    Character f = spin.plus;
    accumulate(f, spin.minus, -1);
    rep.lhs = multiply(dominant_character(pair.g(), lambda), f);

    SubSystem sub = pair.sub();
    for (const auto& e : multiplet(pair, lambda).entries)
        accumulate(rep.rhs, dominant_character(sub, e.mu), e.sign);

    rep.diff = rep.lhs;
    accumulate(rep.diff, rep.rhs, -1);
    rep.ok = rep.diff.empty();
    return rep;
}

}  // namespace mplt
