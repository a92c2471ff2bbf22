#include "mplt/asdim.hpp"
#include "mplt/cli.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mplt;

namespace {

// pybind11 holders cannot be shared_ptr<const T>
using Shared = std::shared_ptr<RootSystem>;

py::object fraction(const Rational& q) {
    static py::handle F = py::object(py::module_::import("fractions").attr("Fraction")).release();
    return F(q.get_str());
}

py::object integer(const BigInt& z) { return py::int_(py::str(z.get_str())); }

py::list vec(const Weight& w) {
    py::list out;
    for (const auto& x : w.c) out.append(fraction(x));
    return out;
}

Rational rat(const py::handle& h) {
    if (py::isinstance<py::int_>(h)) return Rational(py::str(h).cast<std::string>());
    return parse_rational(py::str(h).cast<std::string>());
}

Weight weight(const RootSystem& rs, const std::vector<py::object>& xs) {
    if (xs.empty()) return Weight(rs.rank);
    if (static_cast<int>(xs.size()) != rs.rank) throw Error("domain", "weight needs " + std::to_string(rs.rank) + " coordinates");
    Weight w(rs.rank);
    for (std::size_t i = 0; i < xs.size(); ++i) w[i] = rat(xs[i]);
    return w;
}

AutType aut_of(const RootSystem& rs, const std::optional<std::vector<int>>& s) {
    return s ? make_aut(rs, *s) : identity_aut(rs);
}

py::object from_json(const cli::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(mplt, m) {
    m.doc() = "Exact root-system, multiplet and character identity checks";

    // module-lifetime reference, deliberately never released
    static PyObject* err = py::exception<Error>(m, "Error", PyExc_ValueError).release().ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(err, (e.kind + ": " + e.what()).c_str());
        } catch (const cli::InputError& e) {
            PyErr_SetString(err, (std::string("input: ") + e.what()).c_str());
        }
    });

    py::class_<RootSystem, Shared>(m, "RootSystem")
        .def_property_readonly("label", &RootSystem::label)
        .def_readonly("rank", &RootSystem::rank)
        .def_readonly("dim", &RootSystem::dim)
        .def_readonly("marks", &RootSystem::marks)
        .def_property_readonly("g", [](const RootSystem& rs) { return fraction(rs.g); })
        .def_property_readonly("rho", [](const RootSystem& rs) { return vec(rs.rho); })
        .def_property_readonly("roots", [](const RootSystem& rs) {
            py::list out;
            for (const auto& a : rs.roots) out.append(vec(a));
            return out;
        })
        .def_property_readonly("weyl_order", [](const RootSystem& rs) { return integer(weyl_group_order(rs)); })
        .def("weyl_dim", [](const RootSystem& rs, const std::vector<py::object>& l) { return integer(weyl_dim(rs, weight(rs, l))); })
        .def("__repr__", [](const RootSystem& rs) { return "<RootSystem " + rs.label() + ">"; });

    m.def("root_system", [](const std::string& label, const std::string& norm) {
        return std::const_pointer_cast<RootSystem>(build_root_system(label, parse_normalization(norm)));
    }, py::arg("label"), py::arg("normalization") = "theta2");

    py::class_<Pair>(m, "Pair")
        .def_property_readonly("label", &Pair::label)
        .def_property_readonly("ambient", [](const Pair& p) { return std::const_pointer_cast<RootSystem>(p.ambient); })
        .def_property_readonly("sub_roots", [](const Pair& p) {
            py::list out;
            for (const auto& a : p.sub_roots) out.append(vec(a));
            return out;
        })
        .def_readonly("center_dim", &Pair::center_dim)
        .def_property_readonly("proper", &Pair::proper)
        .def_property_readonly("symmetric", [](const Pair& p) { return is_symmetric_pair(p); })
        .def("__repr__", [](const Pair& p) { return "<Pair " + p.label() + ">"; });

    m.def("bds", [](Shared rs, const std::vector<int>& steps) { return borel_de_siebenthal(rs, steps); }, py::arg("rs"),
          py::arg("steps"), "Borel-de Siebenthal steps");
    m.def("pair_from_roots", [](Shared rs, const std::vector<std::vector<int>>& r) { return pair_from_simple_coords(rs, r); },
          py::arg("rs"), py::arg("roots"), "subsystem from roots in simple-root coordinates");
    m.def("full_pair", [](Shared rs) { return full_pair(rs); });
    m.def("equal_rank_pairs", [](Shared rs, bool full) { return equal_rank_pairs(rs, full); }, py::arg("rs"),
          py::arg("include_full") = false);

    m.def("multiplet", [](const Pair& p, const std::vector<py::object>& lam) {
        auto mu = multiplet(p, weight(p.g(), lam));
        py::list out;
        for (const auto& e : mu.entries) {
            py::dict d;
            d["rep"] = to_string(e.rep);
            d["sign"] = e.sign;
            d["dim"] = integer(e.dim);
            d["mu"] = vec(e.mu);
            d["qdim"] = to_string(e.qdim);
            out.append(d);
        }
        return out;
    }, py::arg("pair"), py::arg("weight") = std::vector<py::object>{});
    m.def("signed_dim_sum", [](const Pair& p, const std::vector<py::object>& lam) {
        return integer(signed_dim_sum(multiplet(p, weight(p.g(), lam))));
    }, py::arg("pair"), py::arg("weight") = std::vector<py::object>{});
    m.def("gkrs", [](const Pair& p, const std::vector<py::object>& lam) { return verify_gkrs(p, weight(p.g(), lam)).ok; },
          py::arg("pair"), py::arg("weight") = std::vector<py::object>{});

    m.def("vsf", [](const RootSystem& rs, const std::vector<int>& s) {
        auto k = build_root_system(rs.label(), Normalization::Killing);
        return fraction(verify_vsf(*k, make_aut(*k, s)));
    }, py::arg("rs"), py::arg("aut"), "residual of the very strange formula");
    m.def("masterrho", [](const Pair& p, const std::optional<std::vector<int>>& s) {
        return fraction(verify_masterrho(p, aut_of(p.g(), s)));
    }, py::arg("pair"), py::arg("aut") = py::none());
    m.def("central_charge", [](const Pair& p, const py::object& k) { return fraction(central_charge(p, rat(k))); },
          py::arg("pair"), py::arg("k") = 0);

    m.def("hwk", [](const Pair& p, const std::optional<std::vector<int>>& s, const std::vector<py::object>& lam,
                    const py::object& level, const py::object& depth) {
        auto ctx = make_context(p, aut_of(p.g(), s));
        return verify_hwk(ctx, AffineWeight(weight(p.g(), lam), rat(level), 0), rat(depth)).ok;
    }, py::arg("pair"), py::arg("aut") = py::none(), py::arg("weight") = std::vector<py::object>{},
       py::arg("level") = 1, py::arg("depth") = 1);

    m.def("asdim_sum", [](const Pair& p, int max_length, int precision) {
        auto ctx = make_context(p, identity_aut(p.g()));
        auto s = signed_asdim_sum(ctx, AffineWeight(Weight(p.g().rank), 1, 0), max_length, precision);
        py::dict d;
        d["sum"] = s.sum.to_string(30);
        d["log2_abs"] = s.sum.log2_abs();
        d["terms"] = s.terms;
        d["closed"] = s.closed;
        return d;
    }, py::arg("pair"), py::arg("max_length") = 16, py::arg("precision") = 256);

    m.def("run_job", [](const std::string& text) {
        auto job = cli::parse_job(cli::parse_document(text, "<job>"));
        auto rep = cli::run(job);
        py::list out;
        for (const auto& x : rep.results) {
            py::dict d;
            d["check"] = x.check;
            d["cell"] = x.cell;
            d["status"] = cli::to_string(x.status);
            d["residual"] = x.residual;
            d["detail"] = from_json(x.detail);
            out.append(d);
        }
        return py::make_tuple(out, rep.exit_code());
    }, py::arg("job_json"), "run a JSON job; returns (results, exit code)");
}
