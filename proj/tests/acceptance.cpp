// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "oracles.hpp"
#include "mplt/asdim.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace mplt;

namespace {

const std::vector<std::string> kRankFour = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"};

struct Outcome {
    bool ok = true;
    std::string note;
};

int failures = 0;

void criterion(int n, double budget_s, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > budget_s) {
        o.ok = false;
        o.note += " over time budget";
    }
    if (!o.ok) ++failures;
    std::printf("%s criterion %d: %s (%.2fs of %.0fs)\n", o.ok ? "PASS" : "FAIL", n, o.note.c_str(), s, budget_s);
    std::fflush(stdout);
}

AffineWeight lambda0(const RootSystem& rs) { return {Weight(rs.rank), 1, 0}; }

// Subset sums of the given modes, kept above a delta floor.
std::set<AffineWeight> subset_sums(const AffineWeight& top, const std::vector<AffineRoot>& modes, const Rational& floor) {
    std::set<AffineWeight> out{top};
    for (const auto& b : modes) {
        auto cur = out;
        for (const auto& x : cur) {
            AffineWeight y = x - b.weight();
            if (y.delta >= floor) out.insert(y);
        }
    }
    return out;
}

}  // namespace

int main() {
    criterion(1, 60, [] {
        int n = 0;
        bool ok = true;
        auto a1 = build_root_system("A1");
        auto torus = pair_from_roots(a1, {});
        for (int h = 0; h <= 4; ++h, ++n) ok = ok && verify_gkrs(torus, Weight{h}).ok;
        auto g2 = build_root_system("G2");
        auto a2 = borel_de_siebenthal(g2, {1});
        for (const auto& l : {Weight{0, 0}, Weight{1, 0}, Weight{0, 1}}) {
            ok = ok && verify_gkrs(a2, l).ok;
            ++n;
        }
        auto f4 = build_root_system("F4");
        ok = ok && verify_gkrs(borel_de_siebenthal(f4, {4}), Weight(4)).ok;
        ++n;
        return Outcome{ok, std::to_string(n) + " character identities"};
    });

    criterion(2, 300, [] {
        long cells = 0, bad = 0, pairs = 0;
        for (const auto& l : kRankFour) {
            auto rs = build_root_system(l);
            auto weights = dominant_weights_up_to_height(*rs, 3);
            for (const auto& p : equal_rank_pairs(rs)) {
                ++pairs;
                for (const auto& lam : weights) {
                    auto m = multiplet(p, lam);
                    ++cells;
                    if (signed_dim_sum(m) != 0 || !p.r_vee || !signed_qdim_sum(m, *p.r_vee).is_zero()) ++bad;
                }
            }
        }
        auto f4 = build_root_system("F4");
        auto so9 = borel_de_siebenthal(f4, {4});
        bool triplet = multiplet(so9, Weight(4)).entries.size() == 3;
        std::ostringstream os;
        os << pairs << " pairs, " << cells << " (pair, lambda) cells, " << bad << " nonzero; so9 in F4 triplet "
           << (triplet ? "found" : "missing");
        return Outcome{bad == 0 && triplet, os.str()};
    });

    criterion(3, 60, [] {
        long cells = 0, bad = 0;
        for (const auto& l : kRankFour) {
            auto rs = build_root_system(l, Normalization::Killing);
            for (const auto& a : inner_auts(*rs, 6)) {
                ++cells;
                if (verify_vsf(*rs, a) != 0) ++bad;
            }
        }
        auto a1 = build_root_system("A1", Normalization::Killing);
        bool classical = a1->norm2(a1->rho) == Rational(a1->dim) / 24 && verify_vsf(*a1, identity_aut(*a1)) == 0;
        return Outcome{bad == 0 && classical, std::to_string(cells) + " inner types, " + std::to_string(bad) +
                                                  " nonzero residuals; classical instance " + (classical ? "holds" : "fails")};
    });

    criterion(4, 120, [] {
        long cells = 0, bad = 0, cc_bad = 0, pairs = 0;
        for (const auto& l : kRankFour) {
            auto rs = build_root_system(l);
            auto auts = inner_auts(*rs, 4);
            for (const auto& p : equal_rank_pairs(rs)) {
                ++pairs;
                for (const auto& a : auts) {
                    ++cells;
                    if (verify_masterrho(p, a) != 0) ++bad;
                }
                if ((central_charge(p, 0) == 0) != is_symmetric_pair(p)) ++cc_bad;
            }
        }
        std::ostringstream os;
        os << cells << " (pair, sigma) cells, " << bad << " nonzero; central charge vs symmetry mismatches " << cc_bad
           << " of " << pairs;
        return Outcome{bad == 0 && cc_bad == 0, os.str()};
    });

    criterion(5, 10, [] {
        long systems = 0, bad = 0;
        for (const auto& l : kRankFour) {
            auto rs = build_root_system(l);
            for (const auto& a : inner_auts(*rs, 6)) {
                auto sys = build_affine(rs, a);
                ++systems;
                for (const auto& b : sys.simple)
                    if (2 * sys.form(sys.rho_hat, b.weight()) / sys.norm2(b.weight()) != 1) ++bad;
            }
        }
        return Outcome{bad == 0, std::to_string(systems) + " twisted affine systems, " + std::to_string(bad) + " bad simple roots"};
    });

    criterion(6, 120, [] {
        bool ok = true;
        std::ostringstream os;
        auto a1 = build_root_system("A1");
        auto g2 = build_root_system("G2");
        auto torus = pair_from_roots(a1, {});
        auto a2 = borel_de_siebenthal(g2, {1});
        for (const Pair* p : {&torus, &a2}) {
            auto ctx = make_context(*p, identity_aut(p->g()));
            auto lam = lambda0(p->g());
            auto m = affine_multiplet(ctx, lam, 6);
            Rational norm = ctx.sys.norm2(lam + ctx.sys.rho_hat);
            Rational cas = casimir_scalar(ctx, lam);
            int dominant = 0, same_norm = 0, same_cas = 0;
            for (const auto& e : m.entries) {
                dominant += member_dominant(ctx, e);
                same_norm += ctx.sys.norm2(e.nu) == norm;
                same_cas += member_casimir(ctx, e) == cas;
            }
            int n = static_cast<int>(m.entries.size());
            ok = ok && n > 0 && dominant == n && same_norm == n && same_cas == n;
            os << (p == &torus ? "" : "; ") << p->label() << ": " << n << " members" << (m.closed ? "" : " (cutoff)")
               << ", casimir " << to_string(cas);
        }
        return Outcome{ok, os.str()};
    });

    criterion(7, 300, [] {
        auto a1 = build_root_system("A1");
        auto g2 = build_root_system("G2");
        auto torus = pair_from_roots(a1, {});
        auto a2 = borel_de_siebenthal(g2, {1});
        auto tctx = make_context(torus, identity_aut(*a1));
        auto gctx = make_context(a2, identity_aut(*g2));
        bool t = verify_hwk(tctx, lambda0(*a1), 2).ok;
        bool g = verify_hwk(gctx, lambda0(*g2), 1).ok;
        auto ch = truncated_char(tctx.sys, lambda0(*a1), 2);
        bool parts = true;
        for (int n = 0; n <= 2; ++n) {
            auto it = ch.terms.find(AffineWeight(Weight{0}, 1, -n));
            parts = parts && it != ch.terms.end() && it->second == oracle::partitions(n);
        }
        return Outcome{t && g && parts, std::string("sl2>torus depth 2 ") + (t ? "equal" : "differs") +
                                            ", G2>A2 depth 1 " + (g ? "equal" : "differs") + ", p(0..2) = 1,1,2 " +
                                            (parts ? "matched" : "not matched")};
    });

    criterion(8, 10, [] {
        auto a1 = build_root_system("A1");
        auto torus = pair_from_roots(a1, {});
        auto tctx = make_context(torus, identity_aut(*a1));
        const auto& rho = tctx.sys.rho_hat;
        AffineWeight alpha{a1->simple[0], 0, 0};
        bool first = spin_weights(tctx, 0) == AffineCharacter{{rho, 2}, {rho - alpha, 2}};

        long configs = 0, stray = 0;
        for (const auto& l : {"A1", "A2", "B2", "G2", "A3"}) {
            auto rs = build_root_system(l);
            std::vector<Pair> ps = equal_rank_pairs(rs);
            ps.push_back(pair_from_roots(rs, {}));
            for (const auto& p : ps)
                for (const auto& a : inner_auts(*rs, 2)) {
                    auto ctx = make_context(p, a);
                    Rational depth = 1;
                    auto w = spin_weights(ctx, depth);
                    auto s = subset_sums(ctx.sys.rho_hat, spin_modes(ctx, depth, false), ctx.sys.rho_hat.delta - depth);
                    ++configs;
                    for (const auto& [x, c] : w) stray += !s.count(x);
                }
        }
        return Outcome{first && stray == 0, std::string("sl2>torus depth 0 ") + (first ? "matches" : "differs") + "; " +
                                                std::to_string(configs) + " configurations, " + std::to_string(stray) +
                                                " weights outside rho_hat - S"};
    });

    criterion(9, 120, [] {
        bool ok = true;
        std::ostringstream os;
        auto g2 = build_root_system("G2");
        auto c2 = build_root_system("C2");
        auto p1 = borel_de_siebenthal(g2, {2});
        auto p2 = borel_de_siebenthal(c2, {1});
        for (const Pair* p : {&p1, &p2}) {
            auto ctx = make_context(*p, identity_aut(p->g()));
            auto lo = signed_asdim_sum(ctx, lambda0(p->g()), 16, 256);
            auto hi = signed_asdim_sum(ctx, lambda0(p->g()), 16, 512);
            // 10^-60 is about 2^-199.3
            bool small = lo.closed && lo.sum.log2_abs() < -199.4;
            bool better = hi.sum.is_zero() ||
                          (hi.sum.log2_abs() < -400 && (lo.sum.is_zero() || hi.sum.log2_abs() < lo.sum.log2_abs() - 200));
            ok = ok && small && better;
            os << p->label() << ": " << lo.terms << " terms, |sum| " << lo.sum.abs().to_string(3) << " at 256 bits, "
               << hi.sum.abs().to_string(3) << " at 512; ";
        }
        auto a1 = build_root_system("A1");
        auto torus = pair_from_roots(a1, {});
        bool stip = asdim_irrep(torus, 0, Weight{5}, 1).to_double() == 1.0;
        ok = ok && stip;
        os << "torus factor asdim " << (stip ? "= 1" : "!= 1");
        return Outcome{ok, os.str()};
    });

    criterion(10, 300, [] {
        long pairs = 0, bad = 0;
        for (const auto& l : kRankFour) {
            auto rs = build_root_system(l);
            if (weyl_group_order(*rs) > 1152) continue;
            for (const auto& p : equal_rank_pairs(rs)) {
                ++pairs;
                std::set<Weight> got;
                for (const auto& w : minimal_coset_reps(p)) got.insert(w.apply(*rs, rs->rho));
                if (got != oracle::coset_keys(p)) ++bad;
            }
        }
        auto a1 = build_root_system("A1");
        auto sys = build_affine(a1, identity_aut(*a1));
        bool pbw = true;
        for (int d = 0; d <= 2; ++d) {
            std::map<std::pair<int, int>, int> got;
            for (const auto& [w, c] : truncated_char(sys, lambda0(*a1), d).terms)
                got[{static_cast<int>(w.fin[0].get_num().get_si()) / 2, static_cast<int>(-w.delta.get_num().get_si())}] =
                    static_cast<int>(c.get_si());
            pbw = pbw && got == oracle::sl2_basic_fock(d);
        }
        return Outcome{bad == 0 && pbw, std::to_string(pairs) + " finite pairs checked against full W, " +
                                            std::to_string(bad) + " mismatches; sl2 truncated character vs Fock count " +
                                            (pbw ? "equal" : "differs")};
    });

    return failures ? 1 : 0;
}
