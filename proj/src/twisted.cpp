#include "mplt/twisted.hpp"

#include <numeric>

namespace mplt {

bool AutType::is_identity() const { return m == 1; }

std::string to_string(const AutType& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.s.size(); ++i) s += (i ? "," : "") + std::to_string(a.s[i]);
    return s + ";1)";
}

AutType make_aut(const RootSystem& rs, std::vector<int> s) {
    if (static_cast<int>(s.size()) != rs.rank + 1)
        throw Error("invalid-aut", "type needs " + std::to_string(rs.rank + 1) + " entries");
    int g = 0, m = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0) throw Error("invalid-aut", "negative entry in automorphism type");
        g = std::gcd(g, s[i]);
        m += rs.marks[i] * s[i];
    }
    if (m == 0) throw Error("invalid-aut", "all entries are zero");
    if (g != 1) throw Error("invalid-aut", "gcd of the type entries is " + std::to_string(g));
    return AutType{std::move(s), m};
}

AutType identity_aut(const RootSystem& rs) {
    std::vector<int> s(rs.rank + 1, 0);
    s[0] = 1;
    return make_aut(rs, s);
}

std::vector<AutType> inner_auts(const RootSystem& rs, int max_m) {
    std::vector<AutType> out;
    std::vector<int> cur(rs.rank + 1, 0);
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == rs.rank + 1) {
            if (used == 0) return;
            int g = 0;
            for (int x : cur) g = std::gcd(g, x);
            if (g == 1) out.push_back(make_aut(rs, cur));
            return;
        }
        for (int v = 0; used + v * rs.marks[i] <= max_m; ++v) {
            cur[i] = v;
            self(self, i + 1, used + v * rs.marks[i]);
        }
        cur[i] = 0;
    };
    rec(rec, 0, 0);
    std::stable_sort(out.begin(), out.end(), [](const AutType& a, const AutType& b) { return a.m < b.m; });
    return out;
}

int raw_grade(const RootSystem& rs, const AutType& aut, const Weight& root) {
    const auto& c = rs.simple_coords(root);
    int g = 0;
    for (int i = 0; i < rs.rank; ++i) g += c[i] * aut.s[i + 1];
    return g;
}

int grade(const RootSystem& rs, const AutType& aut, const Weight& root) {
    int g = raw_grade(rs, aut, root) % aut.m;
    return g < 0 ? g + aut.m : g;
}

EigenData eigenspace_dims(const RootSystem& rs, const AutType& aut, const std::vector<Weight>& roots,
                          int cartan) {
    EigenData e;
    e.dims.assign(aut.m, 0);
    e.dims[0] = cartan;
    for (const auto& a : roots) {
        int j = grade(rs, aut, a);
        e.root_grade[a] = j;
        ++e.dims[j];
    }
    return e;
}

EigenData eigenspace_dims(const RootSystem& rs, const AutType& aut) {
    return eigenspace_dims(rs, aut, rs.roots, rs.rank);
}

bool in_positive_grade0(const RootSystem& rs, const AutType& aut, const Weight& root) {
    int g = raw_grade(rs, aut, root);
    return rs.is_positive_root(root) ? g == 0 : g == -aut.m;
}

Weight rho_sigma_of(const RootSystem& rs, const AutType& aut, const std::vector<Weight>& roots) {
    Weight r(rs.rank);
    for (const auto& a : roots) {
        int j = grade(rs, aut, a);
        if (j == 0) {
            if (in_positive_grade0(rs, aut, a)) r += a * Rational(1, 2);
        } else if (2 * j < aut.m) {
            r += a * (Rational(1, 2) * (1 - frac(2 * j, aut.m)));
        }
    }
    return r;
}

Weight rho_sigma(const RootSystem& rs, const AutType& aut) { return rho_sigma_of(rs, aut, rs.roots); }

Weight rho_a_sigma(const Pair& pair, const AutType& aut) {
    return rho_sigma_of(pair.g(), aut, pair.sub_roots);
}

Rational z_const(const EigenData& e) {
    const int m = static_cast<int>(e.dims.size());
    Rational z = 0;
    for (int r = 1; r < m; ++r) {
        Rational j = frac(r, m);
        z += j * (1 - j) / 2 * e.dims[r];
    }
    return z / 2;
}

std::vector<Rational> z_factors(const Pair& pair, const AutType& aut) {
    std::vector<Rational> out;
    for (const auto& f : pair.factors)
        out.push_back(f.torus ? Rational(0) : z_const(eigenspace_dims(pair.g(), aut, f.roots, f.rank)));
    return out;
}

Weight lambda_s(const RootSystem& rs, const AutType& aut) {
    if (rs.normalization != Normalization::Killing)
        throw Error("wrong-normalization", "lambda_s needs the Killing form");
    Weight l(rs.rank);
    for (int i = 0; i < rs.rank; ++i) l[i] = Rational(aut.s[i + 1]) / (aut.m * rs.simple_norm[i]);
    return l;
}

Rational verify_vsf(const RootSystem& rs, const AutType& aut) {
    Weight d = rs.rho - lambda_s(rs, aut);
    auto e = eigenspace_dims(rs, aut);
    Rational sum = 0;
    for (int j = 1; j < aut.m; ++j) sum += j * (aut.m - j) * e.dims[j];
    Rational rhs = frac(rs.dim, 24) - sum / (4 * aut.m * aut.m);
    return rs.norm2(d) - rhs;
}

namespace {

Rational master_rhs(const Pair& pair, const AutType& aut) {
    const RootSystem& rs = pair.g();
    Rational rhs = rs.g * rs.dim / 12 - 2 * rs.g * z_const(eigenspace_dims(rs, aut));
    auto zs = z_factors(pair, aut);
    for (std::size_t i = 0; i < pair.factors.size(); ++i) {
        const auto& f = pair.factors[i];
        rhs -= f.g * f.dim / 12 - 2 * f.g * zs[i];
    }
    return rhs;
}

}  // namespace

Rational verify_masterrho(const Pair& pair, const AutType& aut) {
    const RootSystem& rs = pair.g();
    Rational lhs = rs.norm2(rho_sigma(rs, aut)) - rs.norm2(rho_a_sigma(pair, aut));
    return lhs - master_rhs(pair, aut);
}

Rational verify_masternok(const Pair& pair, const AutType& aut, const Weight& lambda, const Rational&) {
    const RootSystem& rs = pair.g();
    Weight rs_sigma = rho_sigma(rs, aut);
    Weight ras = rho_a_sigma(pair, aut);
    Weight lr = lambda + rs_sigma;
    for (const auto& h : center_basis(pair))
        if (rs.form(lr, h) != 0)
            throw Error("precondition", "Lambda + rho_sigma does not vanish on the center of a");
    Weight mu = lr - ras;
    Rational lhs = rs.form(mu + ras * 2, mu) - rs.form(lambda + rs_sigma * 2, lambda);
    return lhs - master_rhs(pair, aut);
}

Rational central_charge(const Pair& pair, const Rational& k) {
    const RootSystem& rs = pair.g();
    Rational kg = k + rs.g;
    if (kg == 0) throw Error("critical-level", "k = -g");
    Rational c = frac(static_cast<long>(pair.p_roots.size()), 2);
    for (const auto& f : pair.factors) c -= (1 - f.g / kg) * f.dim;
    return c;
}

std::vector<Rational> rhoalfai_residuals(const RootSystem& rs, const AutType& aut) {
    Weight r = rho_sigma(rs, aut);
    std::vector<Rational> out;
    for (int i = 0; i <= rs.rank; ++i) {
        Weight a = i == 0 ? -rs.theta : rs.simple[i - 1];
        out.push_back(2 * rs.form(r, a) - rs.norm2(a) + 2 * rs.g * frac(aut.s[i], aut.m));
    }
    return out;
}

}  // namespace mplt
