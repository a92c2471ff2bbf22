#include "mplt/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

namespace mplt::cli {

std::string to_string(Status s) {
    switch (s) {
        case Status::Verified: return "verified";
        case Status::Violated: return "violated";
        case Status::Inapplicable: return "inapplicable";
        case Status::Unclosed: return "unclosed";
    }
    return "?";
}

int Report::exit_code() const {
    bool unclosed = false;
    for (const auto& r : results) {
        if (r.status == Status::Violated) return 1;
        if (r.status == Status::Unclosed) unclosed = true;
    }
    return unclosed ? 3 : 0;
}

const std::vector<std::string>& registered_checks() {
    static const std::vector<std::string> names{
        "affine_multiplet", "asdim", "central_charge", "gkrs", "hwk", "masternok", "masterrho",
        "rhorho", "signed_dim_sum", "signed_qdim_sum", "spin_weights", "vsf"};
    return names;
}

namespace {

bool needs_pair(const std::string& c) { return c != "vsf" && c != "rhorho"; }
bool needs_aut(const std::string& c) {
    return c != "signed_dim_sum" && c != "signed_qdim_sum" && c != "gkrs" && c != "central_charge";
}
bool needs_weight(const std::string& c) {
    return c == "signed_dim_sum" || c == "signed_qdim_sum" || c == "gkrs" || c == "masternok";
}
bool needs_affine_weight(const std::string& c) { return c == "affine_multiplet" || c == "hwk" || c == "asdim"; }

// ---- parsing ------------------------------------------------------------------------

Rational rational_of(const json& v, const std::string& what) {
    try {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long>());
    } catch (const Error&) {
    }
    throw InputError(what + ": expected a rational literal like \"3/2\", got " + v.dump());
}

int int_of(const json& v, const std::string& what) {
    if (!v.is_number_integer()) throw InputError(what + ": expected an integer, got " + v.dump());
    return v.get<int>();
}

std::vector<int> ints_of(const json& v, const std::string& what) {
    if (!v.is_array()) throw InputError(what + ": expected an array of integers");
    std::vector<int> out;
    for (const auto& x : v) out.push_back(int_of(x, what));
    return out;
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) throw InputError("unknown key '" + k + "' in " + where);
}

std::string algebra_of(const json& j) {
    if (!j.is_object()) throw InputError("ambient: expected an object");
    check_keys(j, {"type", "rank", "normalization"}, "ambient");
    if (!j.contains("type") || !j["type"].is_string()) throw InputError("ambient.type: expected a string");
    std::string t = j["type"].get<std::string>();
    if (j.contains("rank")) t += std::to_string(int_of(j["rank"], "ambient.rank"));
    return t;
}

Normalization norm_of(const json& j) {
    if (!j.contains("normalization")) return Normalization::ThetaSquaredTwo;
    try {
        return parse_normalization(j["normalization"].get<std::string>());
    } catch (const std::exception& e) {
        throw InputError(std::string("ambient.normalization: ") + e.what());
    }
}

PairSpec pair_of(const json& j) {
    PairSpec p;
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "full") p.kind = PairSpec::Full;
        else if (s == "equal_rank") p.kind = PairSpec::EqualRank;
        else if (s == "torus") p.kind = PairSpec::Roots;
        else throw InputError("pair: expected \"full\", \"torus\", \"equal_rank\" or an object");
        return p;
    }
    if (!j.is_object()) throw InputError("pair: expected a string or an object");
    check_keys(j, {"steps", "roots"}, "pair");
    if (j.contains("steps") && j.contains("roots")) throw InputError("pair: give either steps or roots");
    if (j.contains("steps")) {
        p.kind = PairSpec::Steps;
        p.steps = ints_of(j["steps"], "pair.steps");
    } else if (j.contains("roots")) {
        p.kind = PairSpec::Roots;
        if (!j["roots"].is_array()) throw InputError("pair.roots: expected an array");
        for (const auto& r : j["roots"]) p.roots.push_back(ints_of(r, "pair.roots"));
    }
    return p;
}

void cutoffs_of(const json& j, Cutoffs& c) {
    if (!j.is_object()) throw InputError("cutoffs: expected an object");
    check_keys(j, {"max_length", "depth", "precision"}, "cutoffs");
    if (j.contains("max_length")) c.max_length = int_of(j["max_length"], "cutoffs.max_length");
    if (j.contains("depth")) c.depth = rational_of(j["depth"], "cutoffs.depth");
    if (j.contains("precision")) c.precision = int_of(j["precision"], "cutoffs.precision");
    if (c.max_length <= 0) throw InputError("cutoffs.max_length must be positive");
    if (c.depth < 0) throw InputError("cutoffs.depth must be non-negative");
    if (c.precision < 64) throw InputError("cutoffs.precision must be at least 64");
}

std::vector<std::string> checks_of(const json& j) {
    if (!j.is_array() || j.empty()) throw InputError("checks: expected a non-empty array of names");
    std::vector<std::string> out, unknown;
    const auto& reg = registered_checks();
    for (const auto& x : j) {
        if (!x.is_string()) throw InputError("checks: names must be strings");
        std::string n = x.get<std::string>();
        if (std::find(reg.begin(), reg.end(), n) == reg.end()) unknown.push_back(n);
        out.push_back(n);
    }
    if (!unknown.empty()) {
        std::string msg = "unknown check";
        for (const auto& u : unknown) msg += " '" + u + "'";
        msg += "; registered checks:";
        for (const auto& r : reg) msg += " " + r;
        throw InputError(msg);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void output_of(const json& j, std::string& format, std::string& path) {
    if (!j.is_object()) throw InputError("output: expected an object");
    check_keys(j, {"format", "path"}, "output");
    if (j.contains("format")) format = j["format"].get<std::string>();
    if (j.contains("path")) path = j["path"].get<std::string>();
    if (format != "json" && format != "table") throw InputError("output.format must be json or table");
}

// ---- evaluation -----------------------------------------------------------------------

struct Cell {
    RootSystemPtr rs;
    const Pair* pair = nullptr;
    std::optional<AutType> aut;
    Weight lambda;
    AffineWeight Lambda;
    Cutoffs cut;
};

std::string cell_label(const std::string& check, const Cell& c) {
    std::string s = c.pair ? c.pair->label() : c.rs->label();
    if (c.aut && needs_aut(check)) s += " " + to_string(*c.aut);
    if (needs_weight(check)) s += " lambda=" + to_string(c.lambda);
    if (needs_affine_weight(check)) s += " Lambda=" + to_string(c.Lambda);
    return s;
}

json cell_params(const std::string& check, const Cell& c);

bool inapplicable_kind(const std::string& kind) {
    static const std::set<std::string> kinds{"improper-pair", "inapplicable", "precondition", "non-dominant",
                                             "critical-level", "odd-dim-p"};
    return kinds.count(kind) > 0;
}

json weight_json(const Weight& w) {
    json a = json::array();
    for (const auto& x : w.c) a.push_back(mplt::to_string(x));
    return a;
}

json affine_json(const AffineWeight& w) {
    return json{{"fin", weight_json(w.fin)}, {"level", mplt::to_string(w.level)}, {"delta", mplt::to_string(w.delta)}};
}

std::string character_diff(const Character& d) {
    std::string s = std::to_string(d.size()) + " weights differ";
    if (!d.empty()) s += ", e.g. " + to_string(d.begin()->first) + ": " + mplt::to_string(d.begin()->second);
    return s;
}

// Independent recount of the spin weights by walking subsets of modes.
AffineCharacter spin_by_subsets(const AffinePairContext& ctx, const Rational& depth) {
    auto modes = spin_modes(ctx, depth, true);
    std::vector<AffineWeight> flat;
    for (const auto& m : modes)
        for (int k = 0; k < m.mult; ++k) flat.push_back(m.weight());
    AffineCharacter out;
    const Rational floor = ctx.sys.rho_hat.delta - depth;
    std::function<void(std::size_t, const AffineWeight&)> walk = [&](std::size_t i, const AffineWeight& w) {
        if (i == flat.size()) {
            out[w] += 1;
            return;
        }
        walk(i + 1, w);
        AffineWeight v = w - flat[i];
        if (v.delta >= floor) walk(i + 1, v);
    };
    walk(0, ctx.sys.rho_hat);
    return out;
}

void evaluate(const std::string& check, const Cell& c, CheckResult& r) {
    const RootSystem& rs = *c.rs;
    if (check == "signed_dim_sum") {
        auto m = multiplet(*c.pair, c.lambda);
        BigInt s = signed_dim_sum(m);
        r.residual = mplt::to_string(s);
        r.detail["members"] = m.entries.size();
        r.status = s == 0 ? Status::Verified : Status::Violated;
    } else if (check == "signed_qdim_sum") {
        if (!c.pair->r_vee) throw Error("search-failure", c.pair->r_vee_error);
        auto m = multiplet(*c.pair, c.lambda);
        QLaurent s = signed_qdim_sum(m, *c.pair->r_vee);
        r.residual = to_string(s);
        r.detail["r_vee"] = weight_json(*c.pair->r_vee);
        r.detail["members"] = m.entries.size();
        r.status = s.is_zero() ? Status::Verified : Status::Violated;
    } else if (check == "gkrs") {
        auto g = verify_gkrs(*c.pair, c.lambda);
        r.residual = g.ok ? "0" : character_diff(g.diff);
        r.detail["lhs_weights"] = g.lhs.size();
        r.status = g.ok ? Status::Verified : Status::Violated;
    } else if (check == "vsf") {
        auto rk = build_root_system(rs.label(), Normalization::Killing);
        Rational res = verify_vsf(*rk, make_aut(*rk, c.aut->s));
        r.residual = mplt::to_string(res);
        r.status = res == 0 ? Status::Verified : Status::Violated;
    } else if (check == "masterrho") {
        Rational res = verify_masterrho(*c.pair, *c.aut);
        r.residual = mplt::to_string(res);
        r.status = res == 0 ? Status::Verified : Status::Violated;
    } else if (check == "masternok") {
        Rational res = verify_masternok(*c.pair, *c.aut, c.lambda, c.Lambda.level);
        r.residual = mplt::to_string(res);
        r.status = res == 0 ? Status::Verified : Status::Violated;
    } else if (check == "central_charge") {
        Rational cc = central_charge(*c.pair, 0);
        bool sym = is_symmetric_pair(*c.pair);
        r.residual = mplt::to_string(cc);
        r.detail["symmetric"] = sym;
        r.status = (cc == 0) == sym ? Status::Verified : Status::Violated;
    } else if (check == "rhorho") {
        auto sys = build_affine(c.rs, *c.aut);
        bool ok = true;
        json vals = json::array();
        for (const auto& b : sys.simple) {
            Rational v = 2 * sys.form(sys.rho_hat, b.weight()) / rs.norm2(b.fin);
            vals.push_back(mplt::to_string(v));
            ok = ok && v == 1;
        }
        r.residual = ok ? "0" : vals.dump();
        r.status = ok ? Status::Verified : Status::Violated;
    } else if (check == "affine_multiplet") {
        auto ctx = make_context(*c.pair, *c.aut);
        auto m = affine_multiplet(ctx, c.Lambda, c.cut.max_length);
        Rational norm = ctx.sys.norm2(c.Lambda + ctx.sys.rho_hat), cas = casimir_scalar(ctx, c.Lambda);
        std::size_t bad = 0;
        for (const auto& e : m.entries)
            if (!member_dominant(ctx, e) || ctx.sys.norm2(e.nu) != norm || member_casimir(ctx, e) != cas) ++bad;
        r.residual = std::to_string(bad) + " bad members";
        r.detail["members"] = m.entries.size();
        r.detail["casimir"] = mplt::to_string(cas);
        r.detail["closed"] = m.closed;
        r.status = bad ? Status::Violated : m.closed ? Status::Verified : Status::Unclosed;
    } else if (check == "hwk") {
        auto ctx = make_context(*c.pair, *c.aut);
        auto h = verify_hwk(ctx, c.Lambda, c.cut.depth);
        r.residual = std::to_string(h.diff.size()) + " weights differ";
        r.detail["representatives"] = h.representatives;
        r.detail["lhs_weights"] = h.lhs.terms.size();
        r.detail["depth"] = mplt::to_string(c.cut.depth);
        r.status = !h.closed ? Status::Unclosed : h.diff.empty() ? Status::Verified : Status::Violated;
    } else if (check == "spin_weights") {
        auto ctx = make_context(*c.pair, *c.aut);
        auto sw = spin_weights(ctx, c.cut.depth);
        auto brute = spin_by_subsets(ctx, c.cut.depth);
        bool ok = sw == brute;
        for (const auto& [w, m] : sw) ok = ok && w.level == rs.g;
        BigInt total = 0;
        for (const auto& [w, m] : sw) total += m;
        r.residual = ok ? "0" : "multiset differs from subset enumeration";
        r.detail["distinct"] = sw.size();
        r.detail["total"] = mplt::to_string(total);
        r.status = ok ? Status::Verified : Status::Violated;
    } else if (check == "asdim") {
        auto ctx = make_context(*c.pair, *c.aut);
        auto prec = static_cast<mpfr_prec_t>(c.cut.precision);
        auto s = signed_asdim_sum(ctx, c.Lambda, c.cut.max_length, prec);
        r.detail["terms"] = s.terms;
        r.detail["max_term"] = s.max_term.to_string(12);
        r.residual = s.sum.to_string(6);
        if (!s.closed) {
            r.status = Status::Unclosed;
            return;
        }
        double bound = s.max_term.log2_abs() - c.cut.precision / 2.0;
        r.status = s.sum.log2_abs() < bound ? Status::Verified : Status::Violated;
    }
}

json cell_params(const std::string& check, const Cell& c) {
    json p{{"algebra", c.rs->label()}, {"normalization", to_string(c.rs->normalization)}};
    if (c.pair) p["pair"] = c.pair->label();
    if (c.aut && needs_aut(check)) p["aut"] = c.aut->s;
    if (needs_weight(check)) p["lambda"] = weight_json(c.lambda);
    if (needs_affine_weight(check)) {
        p["Lambda"] = affine_json(c.Lambda);
        p["cutoffs"] = {{"max_length", c.cut.max_length}, {"depth", mplt::to_string(c.cut.depth)}};
        if (check == "asdim") p["cutoffs"]["precision"] = c.cut.precision;
    } else if (check == "spin_weights") {
        p["cutoffs"] = {{"depth", mplt::to_string(c.cut.depth)}};
    }
    return p;
}

CheckResult run_check(const std::string& check, const Cell& c) {
    CheckResult r;
    r.check = check;
    r.cell = cell_label(check, c);
    r.params = cell_params(check, c);
    auto t0 = std::chrono::steady_clock::now();
    try {
        evaluate(check, c, r);
    } catch (const Error& e) {
        r.status = inapplicable_kind(e.kind) ? Status::Inapplicable : Status::Violated;
        r.residual = e.kind + ": " + e.what();
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<Pair> build_pairs(RootSystemPtr rs, const PairSpec& p) {
    switch (p.kind) {
        case PairSpec::Full: return {full_pair(rs)};
        case PairSpec::Steps: return {borel_de_siebenthal(rs, p.steps)};
        case PairSpec::Roots: return {pair_from_simple_coords(rs, p.roots)};
        case PairSpec::EqualRank: return equal_rank_pairs(rs);
    }
    return {};
}

RootSystemPtr algebra(const std::string& label, Normalization n) {
    try {
        return build_root_system(label, n);
    } catch (const Error& e) {
        throw InputError(e.what());
    }
}

std::vector<Pair> pairs_or_input_error(RootSystemPtr rs, const PairSpec& p) {
    try {
        return build_pairs(rs, p);
    } catch (const Error& e) {
        throw InputError(std::string("pair: ") + e.what());
    }
}

}  // namespace

json parse_document(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t pos = std::min<std::size_t>(e.byte, text.size());
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < pos; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": parse error: " +
                         e.what());
    }
}

JobSpec parse_job(const json& j) {
    if (!j.is_object()) throw InputError("job: expected an object");
    check_keys(j, {"ambient", "pair", "aut", "weight", "checks", "cutoffs", "output"}, "job");
    JobSpec job;
    if (!j.contains("ambient")) throw InputError("job: missing 'ambient'");
    job.algebra = algebra_of(j["ambient"]);
    job.normalization = norm_of(j["ambient"]);
    if (j.contains("pair")) job.pair = pair_of(j["pair"]);
    if (j.contains("aut")) job.aut = ints_of(j["aut"], "aut");
    if (j.contains("weight")) {
        const json& w = j["weight"];
        if (w.is_array()) {
            for (const auto& x : w) job.weight.push_back(rational_of(x, "weight"));
        } else if (w.is_object()) {
            check_keys(w, {"fin", "level", "delta"}, "weight");
            if (w.contains("fin")) {
                if (!w["fin"].is_array()) throw InputError("weight.fin: expected an array");
                for (const auto& x : w["fin"]) job.weight.push_back(rational_of(x, "weight.fin"));
            }
            if (w.contains("level")) job.level = rational_of(w["level"], "weight.level");
            if (w.contains("delta")) job.delta = rational_of(w["delta"], "weight.delta");
        } else {
            throw InputError("weight: expected an array or an object");
        }
    }
    if (!j.contains("checks")) throw InputError("job: missing 'checks'");
    job.checks = checks_of(j["checks"]);
    if (j.contains("cutoffs")) cutoffs_of(j["cutoffs"], job.cutoffs);
    if (j.contains("output")) output_of(j["output"], job.format, job.path);
    return job;
}

GridSpec parse_grid(const json& j) {
    if (!j.is_object()) throw InputError("grid: expected an object");
    check_keys(j, {"algebras", "types", "ranks", "normalization", "pair", "max_m", "max_height", "level", "checks",
                   "cutoffs", "output"},
               "grid");
    GridSpec g;
    if (j.contains("algebras")) {
        for (const auto& a : j["algebras"]) g.algebras.push_back(a.get<std::string>());
    }
    if (j.contains("types")) {
        if (!j.contains("ranks")) throw InputError("grid: 'types' needs 'ranks'");
        std::vector<int> ranks = ints_of(j["ranks"], "ranks");
        for (const auto& t : j["types"])
            for (int r : ranks) {
                std::string label = t.get<std::string>() + std::to_string(r);
                try {
                    build_root_system(label);
                    g.algebras.push_back(label);
                } catch (const Error&) {
                    // not a valid (type, rank): skipped
                }
            }
    }
    if (j.contains("normalization")) g.normalization = norm_of(j);
    if (j.contains("pair")) g.pair = pair_of(j["pair"]);
    if (j.contains("max_m")) g.max_m = int_of(j["max_m"], "max_m");
    if (j.contains("max_height")) g.max_height = int_of(j["max_height"], "max_height");
    if (j.contains("level")) g.level = rational_of(j["level"], "level");
    if (j.contains("checks")) g.checks = checks_of(j["checks"]);
    if (j.contains("cutoffs")) cutoffs_of(j["cutoffs"], g.cutoffs);
    if (j.contains("output")) output_of(j["output"], g.format, g.path);
    if (g.algebras.empty() || g.checks.empty()) throw InputError("grid is empty");
    if (g.max_m < 1 || g.max_height < 0) throw InputError("grid: max_m >= 1 and max_height >= 0 required");
    return g;
}

namespace {

Weight job_weight(const JobSpec& job, const RootSystem& rs) {
    if (job.weight.empty()) return Weight(rs.rank);
    if (static_cast<int>(job.weight.size()) != rs.rank)
        throw InputError("weight: expected " + std::to_string(rs.rank) + " coordinates");
    return Weight(job.weight);
}

AutType job_aut(const JobSpec& job, const RootSystem& rs) {
    if (!job.aut) return identity_aut(rs);
    try {
        return make_aut(rs, *job.aut);
    } catch (const Error& e) {
        throw InputError(std::string("aut: ") + e.what());
    }
}

}  // namespace

Report run(const JobSpec& job) {
    Report rep;
    auto rs = algebra(job.algebra, job.normalization);
    auto pairs = pairs_or_input_error(rs, job.pair);
    Cell c;
    c.rs = rs;
    c.aut = job_aut(job, *rs);
    c.lambda = job_weight(job, *rs);
    c.Lambda = AffineWeight(c.lambda, job.level, job.delta);
    c.cut = job.cutoffs;
    for (const auto& check : job.checks) {
        if (!needs_pair(check)) {
            rep.results.push_back(run_check(check, c));
            continue;
        }
        for (const auto& p : pairs) {
            c.pair = &p;
            rep.results.push_back(run_check(check, c));
        }
        c.pair = nullptr;
    }
    return rep;
}

Report sweep(const GridSpec& grid) {
    Report rep;
    for (const auto& label : grid.algebras) {
        auto rs = algebra(label, grid.normalization);
        bool any_pair = std::any_of(grid.checks.begin(), grid.checks.end(), needs_pair);
        std::vector<Pair> pairs;
        if (any_pair) pairs = pairs_or_input_error(rs, grid.pair);
        auto auts = inner_auts(*rs, grid.max_m);
        auto weights = dominant_weights_up_to_height(*rs, grid.max_height);
        for (const auto& check : grid.checks) {
            std::vector<const Pair*> ps{nullptr};
            if (needs_pair(check)) {
                ps.clear();
                for (const auto& p : pairs) ps.push_back(&p);
            }
            std::vector<std::optional<AutType>> as{identity_aut(*rs)};
            if (needs_aut(check)) as.assign(auts.begin(), auts.end());
            std::vector<Weight> ws{Weight(rs->rank)};
            if (needs_weight(check) || needs_affine_weight(check)) ws = weights;
            for (const Pair* p : ps)
                for (const auto& a : as)
                    for (const auto& w : ws) {
                        Cell c;
                        c.rs = rs;
                        c.pair = p;
                        c.aut = a;
                        c.lambda = w;
                        c.Lambda = AffineWeight(w, grid.level, 0);
                        c.cut = grid.cutoffs;
                        if (needs_affine_weight(check) && !build_affine(rs, *a).is_dominant_integral(c.Lambda)) continue;
                        rep.results.push_back(run_check(check, c));
                    }
        }
    }
    return rep;
}

json multiplet_json(const JobSpec& job) {
    auto rs = algebra(job.algebra, job.normalization);
    auto pairs = pairs_or_input_error(rs, job.pair);
    Weight lambda = job_weight(job, *rs);
    json out = json::array();
    for (const auto& p : pairs) {
        json pj{{"pair", p.label()}, {"lambda", weight_json(lambda)}};
        if (p.r_vee) pj["r_vee"] = weight_json(*p.r_vee);
        json entries = json::array();
        try {
            auto m = multiplet(p, lambda);
            for (const auto& e : m.entries)
                entries.push_back({{"rep", to_string(e.rep)},
                                   {"mu", weight_json(e.mu)},
                                   {"sign", e.sign},
                                   {"dim", mplt::to_string(e.dim)},
                                   {"qdim", to_string(e.qdim)}});
        } catch (const Error& e) {
            throw InputError(e.what());
        }
        pj["finite"] = entries;
        if (job.aut) {
            auto aut = job_aut(job, *rs);
            auto ctx = make_context(p, aut);
            AffineWeight L(lambda, job.level, job.delta);
            json aff = json::array();
            try {
                auto m = affine_multiplet(ctx, L, job.cutoffs.max_length);
                for (const auto& e : m.entries) {
                    json lv = json::array();
                    for (const auto& x : e.mu_levels) lv.push_back(mplt::to_string(x));
                    aff.push_back({{"rep", to_string(e.rep, 0)},
                                   {"sign", e.sign},
                                   {"nu", affine_json(e.nu)},
                                   {"mu_fin", weight_json(e.mu_fin)},
                                   {"mu_levels", lv},
                                   {"mu_delta", mplt::to_string(e.mu_delta)}});
                }
                pj["affine_closed"] = m.closed;
            } catch (const Error& e) {
                throw InputError(e.what());
            }
            pj["affine"] = aff;
        }
        out.push_back(pj);
    }
    return out;
}

std::string multiplet_table(const JobSpec& job) {
    auto vec = [](const json& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get<std::string>();
        return s + ")";
    };
    auto print = [](std::ostringstream& os, const std::vector<std::vector<std::string>>& rows) {
        std::vector<std::size_t> w;
        for (const auto& r : rows)
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (w.size() <= i) w.push_back(0);
                w[i] = std::max(w[i], r[i].size());
            }
        for (const auto& r : rows) {
            os << " ";
            for (std::size_t i = 0; i < r.size(); ++i)
                os << " " << r[i] << (i + 1 < r.size() ? std::string(w[i] - r[i].size(), ' ') : "");
            os << "\n";
        }
    };
    std::ostringstream os;
    for (const auto& pj : multiplet_json(job)) {
        os << pj["pair"].get<std::string>() << "  lambda=" << vec(pj["lambda"]) << "\n";
        std::vector<std::vector<std::string>> rows{{"rep", "sign", "dim", "mu", "qdim"}};
        for (const auto& e : pj["finite"])
            rows.push_back({e["rep"].get<std::string>(), e["sign"] > 0 ? "+" : "-", e["dim"].get<std::string>(),
                            vec(e["mu"]), e["qdim"].get<std::string>()});
        print(os, rows);
        if (pj.contains("affine")) {
            os << "  affine, closed=" << (pj["affine_closed"].get<bool>() ? "yes" : "no") << "\n";
            rows = {{"rep", "sign", "mu", "levels", "delta"}};
            for (const auto& e : pj["affine"])
                rows.push_back({e["rep"].get<std::string>(), e["sign"] > 0 ? "+" : "-", vec(e["mu_fin"]),
                                vec(e["mu_levels"]), e["mu_delta"].get<std::string>()});
            print(os, rows);
        }
    }
    return os.str();
}

std::string render_json_lines(const Report& r, bool with_timing) {
    std::string out;
    for (const auto& x : r.results) {
        json j{{"check", x.check}, {"cell", x.cell}, {"status", to_string(x.status)}, {"residual", x.residual},
               {"params", x.params}, {"detail", x.detail}};
        if (with_timing) j["timing"] = {{"wall_ms", std::round(x.wall_ms * 1000) / 1000}};
        out += j.dump() + "\n";
    }
    return out;
}

std::string render_table(const Report& r) {
    std::size_t wc = 5, wl = 4;
    for (const auto& x : r.results) {
        wc = std::max(wc, x.check.size());
        wl = std::max(wl, x.cell.size());
    }
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
    std::ostringstream os;
    os << pad("check", wc) << "  " << pad("cell", wl) << "  " << pad("status", 12) << "  residual\n";
    std::map<std::string, int> counts;
    for (const auto& x : r.results) {
        os << pad(x.check, wc) << "  " << pad(x.cell, wl) << "  " << pad(to_string(x.status), 12) << "  " << x.residual
           << "\n";
        ++counts[to_string(x.status)];
    }
    os << "total " << r.results.size();
    for (const auto& [k, v] : counts) os << ", " << k << " " << v;
    os << "\n";
    return os.str();
}

}  // namespace mplt::cli
