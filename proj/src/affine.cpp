#include "mplt/affine.hpp"

#include <set>

namespace mplt {

AffineWeight& AffineWeight::operator+=(const AffineWeight& o) {
    fin += o.fin;
    level += o.level;
    delta += o.delta;
    return *this;
}

AffineWeight& AffineWeight::operator-=(const AffineWeight& o) {
    fin -= o.fin;
    level -= o.level;
    delta -= o.delta;
    return *this;
}

AffineWeight& AffineWeight::operator*=(const Rational& s) {
    fin *= s;
    level *= s;
    delta *= s;
    return *this;
}

std::string to_string(const AffineWeight& w) {
    return to_string(w.fin) + " + " + to_string(w.level) + "L0 + " + to_string(w.delta) + "d";
}

Rational AffineSystem::form(const AffineWeight& a, const AffineWeight& b) const {
    return rs->form(a.fin, b.fin) + a.level * b.delta + b.level * a.delta;
}

bool AffineSystem::is_positive(const AffineRoot& a) const {
    if (!a.real()) return a.s > 0;
    return form(rho_hat, a.weight()) > 0;
}

Rational AffineSystem::coroot_pairing(const AffineWeight& lambda, const AffineRoot& beta) const {
    return 2 * form(lambda, beta.weight()) / rs->norm2(beta.fin);
}

bool AffineSystem::is_dominant_integral(const AffineWeight& lambda) const {
    for (const auto& b : simple) {
        Rational p = coroot_pairing(lambda, b);
        if (!is_integer(p) || p < 0) return false;
    }
    return true;
}

std::vector<AffineRoot> AffineSystem::positive_roots(const Rational& depth) const {
    std::vector<AffineRoot> out;
    const int m = aut.m;
    for (const auto& a : rs->roots) {
        Rational x = frac(raw_grade(*rs, aut, a), m);
        x -= floor_of(x);    // smallest non-negative representative
        for (; x <= depth; x += 1) {
            AffineRoot r{x, a, 1};
            if (is_positive(r)) out.push_back(r);
        }
    }
    for (int n = 1; n <= depth; ++n) out.push_back(AffineRoot{n, Weight(rs->rank), rs->rank});
    std::sort(out.begin(), out.end());
    return out;
}

AffineSystem build_affine(RootSystemPtr rs, const AutType& aut) {
    if (static_cast<int>(aut.s.size()) != rs->rank + 1) throw Error("invalid-aut", "automorphism type has wrong length");
    AffineSystem sys;
    sys.rs = rs;
    sys.aut = aut;
    sys.simple.push_back(AffineRoot{frac(aut.s[0], aut.m), -rs->theta, 1});
    for (int i = 0; i < rs->rank; ++i) sys.simple.push_back(AffineRoot{frac(aut.s[i + 1], aut.m), rs->simple[i], 1});
    sys.rho_hat = AffineWeight(rho_sigma(*rs, aut), rs->g, 0);
    return sys;
}

AffineWeight reflect_affine(const AffineSystem& sys, const AffineWeight& lambda, const AffineRoot& alpha) {
    if (!alpha.real()) throw Error("imaginary-root", "cannot reflect in an imaginary root");
    return lambda - alpha.weight() * sys.coroot_pairing(lambda, alpha);
}

AffineWeight apply_word(const AffineSystem& sys, const WeylWord& w, const AffineWeight& lambda) {
    AffineWeight x = lambda;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) x = reflect_affine(sys, x, sys.simple[*it]);
    return x;
}

AffinePairContext make_context(const Pair& pair, const AutType& aut) {
    AffinePairContext ctx;
    ctx.pair = &pair;
    ctx.sys = build_affine(pair.ambient, aut);
    ctx.rho_a_sigma = rho_a_sigma(pair, aut);
    ctx.z = z_factors(pair, aut);

    std::vector<AffineRoot> cand;
    for (const auto& r : ctx.sys.positive_roots(1))
        if (r.real() && pair.contains(r.fin)) cand.push_back(r);
    std::set<AffineRoot> in(cand.begin(), cand.end());
    for (const auto& b : cand) {
        bool decomposable = in.count(AffineRoot{b.s - 1, b.fin, 1}) > 0;
        for (const auto& c : cand) {
            if (decomposable) break;
            if (c.fin == b.fin) continue;
            decomposable = in.count(AffineRoot{b.s - c.s, b.fin - c.fin, 1}) > 0;
        }
        if (!decomposable) {
            ctx.a_simple.push_back(b);
            ctx.a_simple_factor.push_back(pair.factor_of(b.fin));
        }
    }
    return ctx;
}

namespace {

bool minimal_key(const AffinePairContext& ctx, const AffineWeight& key) {
    for (const auto& g : ctx.a_simple)
        if (ctx.sys.form(g.weight(), key) <= 0) return false;
    return true;
}

// BFS over the weak order restricted to minimal representatives; keys are w(start) for a
// regular dominant start. Stops after `max_length` levels, or when a step would go below
// `floor` in delta.
CosetEnumeration coset_bfs(const AffinePairContext& ctx, const AffineWeight& start, int max_length,
                           const std::optional<Rational>& floor) {
    const AffineSystem& sys = ctx.sys;
    CosetEnumeration out;
    out.reps.push_back(WeylWord{});
    out.keys.push_back(start);
    std::set<AffineWeight> seen{start};
    std::size_t level_begin = 0;
    for (int len = 0; len <= max_length; ++len) {
        std::size_t level_end = out.reps.size();
        if (level_begin == level_end) {
            out.closed = true;
            return out;
        }
        for (std::size_t q = level_begin; q < level_end; ++q) {
            for (std::size_t i = 0; i < sys.simple.size(); ++i) {
                // start is regular dominant, so w s_i(start) = w(start) - <start, b_i^vee> w(b_i)
                AffineWeight wb = apply_word(sys, out.reps[q], sys.simple[i].weight());
                if (sys.form(sys.rho_hat, wb) <= 0) continue;    // w s_i shorter
                Rational p = sys.coroot_pairing(start, sys.simple[i]);
                AffineWeight next = out.keys[q] - wb * p;
                if (floor && next.delta < *floor) continue;
                if (!minimal_key(ctx, next) || !seen.insert(next).second) continue;
                WeylWord w = out.reps[q];
                w.letters.push_back(static_cast<int>(i));
                out.reps.push_back(std::move(w));
                out.keys.push_back(std::move(next));
            }
        }
        level_begin = level_end;
    }
    // Representatives of length max_length + 1 were found: drop them.
    out.closed = level_begin == out.reps.size();
    out.reps.resize(level_begin);
    out.keys.resize(level_begin);
    return out;
}

}  // namespace

CosetEnumeration enumerate_coset_reps(const AffinePairContext& ctx, int max_length) {
    return coset_bfs(ctx, ctx.sys.rho_hat, max_length, std::nullopt);
}

CosetEnumeration enumerate_coset_reps_depth(const AffinePairContext& ctx, const AffineWeight& lambda,
                                            const Rational& depth, int length_cap) {
    AffineWeight start = lambda + ctx.sys.rho_hat;
    return coset_bfs(ctx, start, length_cap, start.delta - depth);
}

AffineMultiplet affine_multiplet(const AffinePairContext& ctx, const AffineWeight& lambda, int max_length) {
    const AffineSystem& sys = ctx.sys;
    if (!sys.is_dominant_integral(lambda))
        throw Error("non-dominant", "Lambda is not dominant integral: " + to_string(lambda));
    auto en = enumerate_coset_reps(ctx, max_length);
    AffineMultiplet m;
    m.closed = en.closed;
    AffineWeight start = lambda + sys.rho_hat;
    for (auto& w : en.reps) {
        AffineMember e;
        e.nu = apply_word(sys, w, start);
        e.sign = w.length() % 2 ? -1 : 1;
        e.mu_fin = e.nu.fin - ctx.rho_a_sigma;
        for (const auto& f : ctx.pair->factors) e.mu_levels.push_back(lambda.level + sys.g().g - f.g);
        e.mu_delta = e.nu.delta;
        e.rep = std::move(w);
        m.entries.push_back(std::move(e));
    }
    return m;
}

bool member_dominant(const AffinePairContext& ctx, const AffineMember& m) {
    const RootSystem& rs = ctx.g();
    for (std::size_t i = 0; i < ctx.a_simple.size(); ++i) {
        const auto& g = ctx.a_simple[i];
        Rational p = 2 * (rs.form(m.mu_fin, g.fin) + g.s * m.mu_levels[ctx.a_simple_factor[i]]) / rs.norm2(g.fin);
        if (!is_integer(p) || p < 0) return false;
    }
    return true;
}

Rational casimir_scalar(const AffinePairContext& ctx, const AffineWeight& lambda) {
    const AffineSystem& sys = ctx.sys;
    Rational c = (sys.norm2(lambda + sys.rho_hat) - sys.g().norm2(ctx.rho_a_sigma)) / 2;
    for (std::size_t i = 0; i < ctx.pair->factors.size(); ++i)
        c += (lambda.level + sys.g().g - ctx.pair->factors[i].g) * ctx.z[i];
    return c;
}

Rational member_casimir(const AffinePairContext& ctx, const AffineMember& m) {
    const RootSystem& rs = ctx.g();
    Rational kg = m.mu_levels.empty() ? rs.g : m.mu_levels.front() + ctx.pair->factors.front().g;
    Rational c = rs.form(m.mu_fin + ctx.rho_a_sigma * 2, m.mu_fin) / 2 + kg * m.mu_delta;
    for (std::size_t i = 0; i < ctx.pair->factors.size(); ++i) c += m.mu_levels[i] * ctx.z[i];
    return c;
}

std::vector<AffineRoot> spin_modes(const AffinePairContext& ctx, const Rational& depth, bool include_center) {
    std::vector<AffineRoot> modes;
    for (const auto& r : ctx.sys.positive_roots(depth))
        if (r.real() && !ctx.pair->contains(r.fin)) modes.push_back(r);
    const int c = ctx.pair->center_dim;
    if (include_center && c > 0) {
        const int n = ctx.g().rank;
        modes.push_back(AffineRoot{0, Weight(n), (c + 1) / 2});
        for (int k = 1; k <= depth; ++k) modes.push_back(AffineRoot{k, Weight(n), c});
    }
    return modes;
}

AffineCharacter spin_weights(const AffinePairContext& ctx, const Rational& depth, bool include_center, bool signed_) {
    if (depth < 0) throw Error("domain", "depth must be non-negative");
    AffineCharacter ch{{ctx.sys.rho_hat, 1}};
    const Rational floor = ctx.sys.rho_hat.delta - depth;
    for (const auto& b : spin_modes(ctx, depth, include_center)) {
        AffineWeight w = b.weight();
        for (int k = 0; k < b.mult; ++k) {
            AffineCharacter next = ch;
            for (const auto& [x, c] : ch) {
                AffineWeight y = x - w;
                if (y.delta < floor) continue;
                auto& slot = next[y];
                slot += signed_ ? BigInt(-c) : c;
                if (slot == 0) next.erase(y);
            }
            ch = std::move(next);
        }
    }
    return ch;
}

void TruncatedCharacter::add(const AffineWeight& w, const BigInt& c) {
    if (c == 0 || depth_of(w) > cutoff) return;
    auto& slot = terms[w];
    slot += c;
    if (slot == 0) terms.erase(w);
}

TruncatedCharacter& TruncatedCharacter::operator+=(const TruncatedCharacter& o) {
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
}

TruncatedCharacter product(const TruncatedCharacter& a, const TruncatedCharacter& b, const Rational& top,
                           const Rational& cutoff) {
    TruncatedCharacter p{top, cutoff, {}};
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) p.add(wa + wb, ca * cb);
    return p;
}

namespace {

// (sum over the orbit of nu of sign * e^{w nu}) / prod (1 - e^{-beta})^mult, keeping delta >= floor.
AffineCharacter wk_quotient(const AffineSystem& sys, const std::vector<AffineRoot>& simple,
                            const std::vector<AffineRoot>& positive, const AffineWeight& nu,
                            const Rational& floor) {
    const int n = sys.g().rank;
    AffineCharacter num{{nu, 1}};
    std::vector<AffineWeight> orbit{nu};
    for (std::size_t q = 0; q < orbit.size(); ++q) {
        const AffineWeight mu = orbit[q];
        const BigInt sign = num.at(mu);
        for (const auto& g : simple) {
            Rational p = sys.coroot_pairing(mu, g);
            if (p <= 0) continue;
            AffineWeight next = mu - g.weight() * p;
            if (next.delta < floor || num.count(next)) continue;
            num[next] = -sign;
            orbit.push_back(next);
        }
    }

    const Rational span = nu.delta - floor;
    AffineCharacter den{{AffineWeight(Weight(n), 0, 0), 1}};
    for (const auto& b : positive) {
        if (b.s > span) continue;
        AffineWeight w = b.weight();
        for (int k = 0; k < b.mult; ++k) {
            AffineCharacter next = den;
            for (const auto& [x, c] : den) {
                AffineWeight y = x - w;
                if (-y.delta > span) continue;
                auto& slot = next[y];
                slot -= c;
                if (slot == 0) next.erase(y);
            }
            den = std::move(next);
        }
    }
    std::vector<std::pair<AffineWeight, BigInt>> den_terms;
    for (const auto& [x, c] : den)
        if (!x.fin.is_zero() || x.delta != 0) den_terms.emplace_back(x, c);

    auto height = [&](const AffineWeight& mu) { return sys.form(sys.rho_hat, nu - mu); };
    std::map<std::pair<Rational, AffineWeight>, bool> queue;
    for (const auto& [x, c] : num) queue.emplace(std::make_pair(height(x), x), true);
    AffineCharacter q;
    while (!queue.empty()) {
        AffineWeight mu = queue.begin()->first.second;
        queue.erase(queue.begin());
        BigInt v = 0;
        if (auto it = num.find(mu); it != num.end()) v = it->second;
        for (const auto& [x, c] : den_terms) {
            auto it = q.find(mu - x);
            if (it != q.end()) v -= c * it->second;
        }
        if (v == 0) continue;
        q[mu] = v;
        for (const auto& [x, c] : den_terms) {
            AffineWeight y = mu + x;
            if (y.delta < floor) continue;
            queue.emplace(std::make_pair(height(y), y), true);
        }
    }
    return q;
}

std::vector<AffineRoot> a_positive(const AffinePairContext& ctx, const Rational& depth) {
    std::vector<AffineRoot> out;
    for (const auto& r : ctx.sys.positive_roots(depth))
        if (ctx.a_root(r)) out.push_back(r);
    return out;
}

}  // namespace

TruncatedCharacter truncated_char(const AffineSystem& sys, const AffineWeight& lambda, const Rational& depth) {
    if (!sys.is_dominant_integral(lambda))
        throw Error("non-dominant", "Lambda is not dominant integral: " + to_string(lambda));
    if (depth < 0) throw Error("domain", "depth must be non-negative");
    AffineWeight nu = lambda + sys.rho_hat;
    auto q = wk_quotient(sys, sys.simple, sys.positive_roots(depth), nu, nu.delta - depth);
    TruncatedCharacter ch{lambda.delta, depth, {}};
    for (const auto& [x, c] : q) ch.add(x - sys.rho_hat, c);
    return ch;
}

HwkReport verify_hwk(const AffinePairContext& ctx, const AffineWeight& lambda, const Rational& depth) {
    const AffineSystem& sys = ctx.sys;
    HwkReport rep;
    TruncatedCharacter chl = truncated_char(sys, lambda, depth);
    TruncatedCharacter spin{sys.rho_hat.delta, depth, spin_weights(ctx, depth, false, true)};
    const Rational top = lambda.delta + sys.rho_hat.delta;
    rep.lhs = product(chl, spin, top, depth);

    auto en = enumerate_coset_reps_depth(ctx, lambda, depth);
    rep.closed = en.closed;
    rep.representatives = en.reps.size();
    rep.rhs = TruncatedCharacter{top, depth, {}};
    const Rational floor = top - depth;
    auto pos = a_positive(ctx, depth);
    for (std::size_t i = 0; i < en.reps.size(); ++i) {
        BigInt sign = en.reps[i].length() % 2 ? -1 : 1;
        for (const auto& [x, c] : wk_quotient(sys, ctx.a_simple, pos, en.keys[i], floor)) rep.rhs.add(x, sign * c);
    }

    rep.diff = rep.lhs.terms;
    for (const auto& [x, c] : rep.rhs.terms) {
        auto& slot = rep.diff[x];
        slot -= c;
        if (slot == 0) rep.diff.erase(x);
    }
    rep.ok = rep.closed && rep.diff.empty();
    return rep;
}

}  // namespace mplt
