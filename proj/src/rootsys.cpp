#include "mplt/rootsys.hpp"

#include "mplt/linalg.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace mplt {

std::string to_string(Normalization n) {
    return n == Normalization::Killing ? "killing" : "theta2";
}

Normalization parse_normalization(std::string_view s) {
    if (s == "theta2" || s == "theta-squared-two" || s.empty()) return Normalization::ThetaSquaredTwo;
    if (s == "killing") return Normalization::Killing;
    throw Error("parse", "unknown normalization '" + std::string(s) + "' (use theta2 or killing)");
}

namespace {

// Squared lengths and inner products of simple roots, long roots of length^2 2.
struct SimpleData {
    std::vector<Rational> d;
    Matrix b;
};

SimpleData simple_data(char type, int n) {
    SimpleData s;
    s.d.assign(n, Rational(2));
    s.b.assign(n, std::vector<Rational>(n));
    auto link = [&](int i, int j, Rational v) { s.b[i][j] = s.b[j][i] = v; };
    switch (type) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case 'B':
            s.d[n - 1] = 1;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case 'C':
            for (int i = 0; i + 1 < n; ++i) s.d[i] = 1;
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, Rational(-1, 2));
            link(n - 2, n - 1, -1);
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 3, n - 1, -1);
            break;
        case 'E':
            // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
            link(0, 2, -1);
            link(1, 3, -1);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case 'F':
            s.d[2] = s.d[3] = 1;
            link(0, 1, -1);
            link(1, 2, -1);
            link(2, 3, Rational(-1, 2));
            break;
        case 'G':
            s.d[0] = Rational(2, 3);
            link(0, 1, -1);
            break;
        default:
            break;
    }
    for (int i = 0; i < n; ++i) s.b[i][i] = s.d[i];
    return s;
}

bool valid_type(char type, int n) {
    if (n < 1 || n > 8) return false;
    switch (type) {
        case 'A': return true;
        case 'B': return n >= 2;
        case 'C': return n >= 2;
        case 'D': return n >= 4;
        case 'E': return n >= 6;
        case 'F': return n == 4;
        case 'G': return n == 2;
        default: return false;
    }
}

}  // namespace

RootSystemPtr build_root_system(char type, int n, Normalization norm) {
    if (!valid_type(type, n))
        throw Error("invalid-type", "unsupported simple type " + std::string(1, type) + std::to_string(n));
    auto rs = std::make_shared<RootSystem>();
    rs->type = type;
    rs->rank = n;
    rs->normalization = norm;
    SimpleData sd = simple_data(type, n);

    rs->cartan.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational v = 2 * sd.b[i][j] / sd.d[j];
            rs->cartan[i][j] = static_cast<int>(v.get_num().get_si());
        }
    Matrix cm(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cm[i][j] = rs->cartan[i][j];
    rs->cartan_inv = inverse(cm);

    // Root strings by reflection closure in simple-root coordinates.
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> todo;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        seen.insert(e);
        todo.push_back(e);
    }
    while (!todo.empty()) {
        auto c = todo.front();
        todo.pop_front();
        for (int i = 0; i < n; ++i) {
            int p = 0;
            for (int j = 0; j < n; ++j) p += c[j] * rs->cartan[j][i];
            if (p == 0) continue;
            auto r = c;
            r[i] -= p;
            if (seen.insert(r).second) todo.push_back(r);
        }
    }
    // s_i(alpha_i) = -alpha_i, so the closure already holds the negative roots.
    std::vector<std::vector<int>> all(seen.begin(), seen.end());
    auto fund = [&](const std::vector<int>& c) {
        Weight w(n);
        for (int i = 0; i < n; ++i) {
            int v = 0;
            for (int j = 0; j < n; ++j) v += c[j] * rs->cartan[j][i];
            w[i] = v;
        }
        return w;
    };
    for (const auto& c : all) {
        Weight w = fund(c);
        rs->simple_coords_of[w] = c;
        rs->roots.push_back(w);
    }
    std::sort(rs->roots.begin(), rs->roots.end());
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        rs->simple.push_back(fund(e));
    }

    // Form. Killing rescales the theta^2 = 2 form by 1/(2 h^vee).
    rs->simple_norm = sd.d;
    Matrix binv = inverse(sd.b);
    rs->gram.assign(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs->gram[i][j] = sd.d[i] / 2 * binv[i][j] * sd.d[j] / 2;

    for (const auto& r : rs->roots)
        if (rs->is_positive_root(r)) rs->positive.push_back(r);
    std::stable_sort(rs->positive.begin(), rs->positive.end(), [&](const Weight& a, const Weight& b) {
        return rs->height(a) < rs->height(b);
    });
    rs->theta = rs->positive.back();
    rs->rho = Weight(n);
    for (int i = 0; i < n; ++i) rs->rho[i] = 1;
    rs->marks.assign(1, 1);
    for (int c : rs->simple_coords(rs->theta)) rs->marks.push_back(c);
    rs->g = rs->form(rs->rho, rs->theta) + rs->norm2(rs->theta) / 2;
    rs->dim = static_cast<int>(rs->roots.size()) + n;

    if (norm == Normalization::Killing) {
        Rational scale = 1 / (2 * rs->g);
        for (auto& x : rs->simple_norm) x *= scale;
        for (auto& row : rs->gram)
            for (auto& x : row) x *= scale;
        rs->g *= scale;
    }
    return rs;
}

RootSystemPtr build_root_system(const std::string& label, Normalization n) {
    if (label.size() < 2) throw Error("invalid-type", "bad type label '" + label + "'");
    char t = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
    int r = 0;
    try {
        r = std::stoi(label.substr(1));
    } catch (...) {
        throw Error("invalid-type", "bad type label '" + label + "'");
    }
    return build_root_system(t, r, n);
}

Rational RootSystem::form(const Weight& a, const Weight& b) const {
    Rational s = 0;
    for (int i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        Rational t = 0;
        for (int j = 0; j < rank; ++j)
            if (b[j] != 0) t += gram[i][j] * b[j];
        s += a[i] * t;
    }
    return s;
}

Rational RootSystem::coroot_pairing(const Weight& lambda, const Weight& alpha) const {
    return 2 * form(lambda, alpha) / norm2(alpha);
}

Weight RootSystem::reflect(const Weight& lambda, const Weight& alpha) const {
    return lambda - alpha * coroot_pairing(lambda, alpha);
}

Weight RootSystem::reflect_simple(const Weight& lambda, int i) const {
    if (lambda[i] == 0) return lambda;
    return lambda - simple[i] * lambda[i];
}

bool RootSystem::is_positive_root(const Weight& w) const {
    const auto& c = simple_coords(w);
    for (int x : c)
        if (x != 0) return x > 0;
    return false;
}

const std::vector<int>& RootSystem::simple_coords(const Weight& root) const {
    auto it = simple_coords_of.find(root);
    if (it == simple_coords_of.end()) throw Error("not-a-root", "not a root: " + to_string(root));
    return it->second;
}

int RootSystem::height(const Weight& root) const {
    int h = 0;
    for (int c : simple_coords(root)) h += c;
    return h;
}

std::vector<Rational> RootSystem::to_simple_basis(const Weight& lambda) const {
    std::vector<Rational> c(rank);
    for (int k = 0; k < rank; ++k)
        for (int i = 0; i < rank; ++i) c[k] += lambda[i] * cartan_inv[i][k];
    return c;
}

bool RootSystem::is_dominant_integral(const Weight& lambda) const {
    if (static_cast<int>(lambda.size()) != rank) return false;
    for (const auto& x : lambda.c)
        if (!is_integer(x) || x < 0) return false;
    return true;
}

Weight RootSystem::coroot(const Weight& alpha) const { return alpha * (Rational(2) / norm2(alpha)); }

BigInt weyl_group_order(const RootSystem& rs) {
    BigInt fact = 1;
    auto factorial = [](int k) {
        BigInt f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    const int n = rs.rank;
    switch (rs.type) {
        case 'A': return factorial(n + 1);
        case 'B':
        case 'C': fact = factorial(n); return fact * (BigInt(1) << n);
        case 'D': fact = factorial(n); return fact * (BigInt(1) << (n - 1));
        case 'E': return n == 6 ? BigInt(51840) : n == 7 ? BigInt(2903040) : BigInt(696729600);
        case 'F': return 1152;
        case 'G': return 12;
        default: return 0;
    }
}

Weight WeylWord::apply(const RootSystem& rs, const Weight& lambda) const {
    Weight w = lambda;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w = rs.reflect_simple(w, *it);
    return w;
}

Weight WeylWord::apply_inverse(const RootSystem& rs, const Weight& lambda) const {
    Weight w = lambda;
    for (int l : letters) w = rs.reflect_simple(w, l);
    return w;
}

std::string to_string(const WeylWord& w, int base) {
    if (w.letters.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) s += ".";
        s += "s" + std::to_string(w.letters[i] + base);
    }
    return s;
}

int inversion_count(const RootSystem& rs, const WeylWord& w) {
    int n = 0;
    for (const auto& a : rs.positive)
        if (!rs.is_positive_root(w.apply(rs, a))) ++n;
    return n;
}

SubSystem SubSystem::full(const RootSystem& rs) {
    return from_positive(rs, rs.simple, rs.positive);
}

SubSystem SubSystem::from_positive(const RootSystem& rs, std::vector<Weight> simple,
                                   std::vector<Weight> positive) {
    SubSystem s;
    s.ambient = &rs;
    s.simple = std::move(simple);
    s.positive = std::move(positive);
    s.rho = Weight(rs.rank);
    Weight rho_vee(rs.rank);
    for (const auto& a : s.positive) {
        s.rho += a;
        rho_vee += rs.coroot(a);
    }
    s.rho *= Rational(1, 2);
    rho_vee *= Rational(1, 2);
    for (const auto& a : s.positive) {
        Rational h = rs.form(a, rho_vee);
        s.heights.push_back(static_cast<int>(h.get_num().get_si()));
    }
    return s;
}

bool SubSystem::is_dominant_integral(const Weight& lambda) const {
    for (const auto& g : simple) {
        Rational p = ambient->coroot_pairing(lambda, g);
        if (!is_integer(p) || p < 0) return false;
    }
    return true;
}

Weight SubSystem::to_dominant(Weight lambda, int* parity) const {
    int par = 0;
    for (bool moved = true; moved;) {
        moved = false;
        for (const auto& g : simple) {
            Rational p = ambient->coroot_pairing(lambda, g);
            if (p < 0) {
                lambda -= g * p;
                par ^= 1;
                moved = true;
            }
        }
    }
    if (parity) *parity = par;
    return lambda;
}

BigInt weyl_dim(const SubSystem& sub, const Weight& lambda) {
    if (!sub.is_dominant_integral(lambda))
        throw Error("non-dominant", "weight is not dominant integral: " + to_string(lambda));
    const RootSystem& rs = *sub.ambient;
    Weight lr = lambda + sub.rho;
    Rational d = 1;
    for (const auto& a : sub.positive) d *= rs.form(lr, a) / rs.form(sub.rho, a);
    if (!is_integer(d)) throw Error("internal", "Weyl dimension is not an integer");
    return d.get_num();
}

BigInt weyl_dim(const RootSystem& rs, const Weight& lambda) {
    if (!rs.is_dominant_integral(lambda))
        throw Error("non-dominant", "weight is not dominant integral: " + to_string(lambda));
    return weyl_dim(SubSystem::full(rs), lambda);
}

Character dominant_character(const SubSystem& sub, const Weight& lambda) {
    if (!sub.is_dominant_integral(lambda))
        throw Error("non-dominant", "weight is not dominant integral: " + to_string(lambda));
    const RootSystem& rs = *sub.ambient;

    // Dominant weights below lambda, reached by subtracting positive roots.
    std::map<Weight, int> depth;
    std::vector<Weight> order{lambda};
    depth[lambda] = 0;
    for (std::size_t q = 0; q < order.size(); ++q) {
        Weight mu = order[q];
        int dmu = depth[mu];
        for (std::size_t k = 0; k < sub.positive.size(); ++k) {
            Weight nu = mu - sub.positive[k];
            if (depth.count(nu) || !sub.is_dominant_integral(nu)) continue;
            depth[nu] = dmu + sub.heights[k];
            order.push_back(nu);
        }
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](const Weight& a, const Weight& b) { return depth[a] < depth[b]; });

    // Freudenthal on dominant representatives.
    std::map<Weight, BigInt> dom;
    const Rational top = rs.norm2(lambda + sub.rho);
    for (const auto& mu : order) {
        if (mu == lambda) {
            dom[mu] = 1;
            continue;
        }
        Rational num = 0;
        int dmu = depth[mu];
        for (std::size_t k = 0; k < sub.positive.size(); ++k) {
            const Weight& a = sub.positive[k];
            Weight v = mu + a;
            for (int j = 1; j * sub.heights[k] <= dmu; ++j, v += a) {
                auto it = dom.find(sub.to_dominant(v));
                if (it == dom.end() || it->second == 0) continue;
                num += Rational(it->second) * rs.form(v, a);
            }
        }
        Rational den = top - rs.norm2(mu + sub.rho);
        Rational m = den == 0 ? Rational(0) : 2 * num / den;
        if (!is_integer(m) || m < 0) throw Error("internal", "Freudenthal produced a non-integer multiplicity");
        dom[mu] = m.get_num();
    }

    Character ch;
    for (const auto& [mu, m] : dom) {
        if (m == 0) continue;
        std::vector<Weight> orbit{mu};
        std::set<Weight> seen{mu};
        for (std::size_t q = 0; q < orbit.size(); ++q)
            for (const auto& g : sub.simple) {
                Weight r = rs.reflect(orbit[q], g);
                if (seen.insert(r).second) orbit.push_back(r);
            }
        for (const auto& w : orbit) ch[w] = m;
    }
    return ch;
}

Character dominant_character(const RootSystem& rs, const Weight& lambda) {
    if (!rs.is_dominant_integral(lambda))
        throw Error("non-dominant", "weight is not dominant integral: " + to_string(lambda));
    return dominant_character(SubSystem::full(rs), lambda);
}

Character multiply(const Character& a, const Character& b) {
    Character out;
    for (const auto& [wa, ma] : a)
        for (const auto& [wb, mb] : b) out[wa + wb] += ma * mb;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

void accumulate(Character& into, const Character& x, const BigInt& coeff) {
    for (const auto& [w, m] : x) {
        auto& slot = into[w];
        slot += coeff * m;
        if (slot == 0) into.erase(w);
    }
}

BigInt total_multiplicity(const Character& ch) {
    BigInt s = 0;
    for (const auto& [w, m] : ch) s += m;
    return s;
}

std::vector<Weight> dominant_weights_up_to_height(const RootSystem& rs, int h) {
    std::vector<Weight> out;
    std::vector<int> cur(rs.rank, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == rs.rank) {
            out.push_back(Weight::from_ints(cur));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[i] = v;
            self(self, i + 1, left - v);
        }
        cur[i] = 0;
    };
    rec(rec, 0, h);
    std::stable_sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
        Rational sa = 0, sb = 0;
        for (const auto& x : a.c) sa += x;
        for (const auto& x : b.c) sb += x;
        return sa < sb;
    });
    return out;
}

}  // namespace mplt
