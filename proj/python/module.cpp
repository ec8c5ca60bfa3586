#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "illumcover/fractional.hpp"
#include "illumcover/io.hpp"
#include "illumcover/polydisc.hpp"
#include "illumcover/svg.hpp"
#include "illumcover/zonoid.hpp"
#include "illumcover/zonotope.hpp"

#include <sstream>

namespace py = pybind11;
using namespace illumcover;

namespace {

Rat rat_from_str(const std::string& s) { return parse_rational(s); }

py::list cover_bases(const CubeCover& c) {
    py::list out;
    if (c.mode == Mode::Exact) {
        for (const auto& b : c.bases) out.append(to_string(b));
    } else {
        for (const auto& b : c.bases_f) out.append(b);
    }
    return out;
}

CanonicalZonotope canonical_from_lists(const std::string& field, int n,
                                       const std::vector<std::vector<Cx>>& gens,
                                       const std::vector<int>& lambda) {
    CanonicalZonotope K;
    K.field = field == "real" ? Field::Real : Field::Complex;
    K.n = n;
    K.gens = gens;
    K.lambda = lambda;
    return K;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "torus cube covers and illumination numbers";

    py::register_exception<Error>(m, "IllumcoverError");

    // torus arithmetic, string-rational interface
    m.def("oriented_distance", [](const std::string& a, const std::string& b) {
        return to_string(oriented_distance(parse_unit_rational(a), parse_unit_rational(b)));
    });
    m.def("cyclic_order", [](const std::vector<std::string>& pts) {
        std::vector<UnitRat> in;
        for (const auto& p : pts) in.push_back(parse_unit_rational(p));
        std::vector<std::string> out;
        for (const auto& p : cyclic_order(in)) out.push_back(to_string(p));
        return out;
    });
    m.def("scale", [](long long k, const std::string& a) {
        return to_string(scale(Int(k), parse_unit_rational(a)));
    });

    py::class_<CubeCover>(m, "CubeCover")
        .def_property_readonly("dim", [](const CubeCover& c) { return c.dim; })
        .def_property_readonly("size", [](const CubeCover& c) { return c.size(); })
        .def_property_readonly("side",
                               [](const CubeCover& c) {
                                   return c.mode == Mode::Exact ? rational_string(c.side)
                                                                : format_double(c.side_f);
                               })
        .def_property_readonly("bases", &cover_bases)
        .def("__repr__", [](const CubeCover& c) {
            std::ostringstream os;
            os << "CubeCover(n=" << c.dim << ", size=" << c.size() << ")";
            return os.str();
        });

    m.def("construct_cover", &construct_cover, py::arg("n"), py::arg("m"));
    m.def(
        "verify_cover",
        [](const CubeCover& c, int threads) {
            CoverCertificate cert = verify_cover(c, threads);
            py::dict out;
            out["covered"] = cert.verdict == Verdict::Covered;
            out["grid"] = cert.candidate_grid_size;
            if (cert.witness) out["witness"] = to_string(*cert.witness);
            if (!cert.witness_f.empty()) out["witness"] = cert.witness_f;
            return out;
        },
        py::arg("cover"), py::arg("threads") = 1);
    m.def("cover_to_text", &write_cover);
    m.def("cover_from_text", [](const std::string& text) {
        std::istringstream in(text);
        return read_cover(in);
    });
    m.def("cover_svg", &emit_svg);

    m.def("lower_bound_unit_fraction",
          [](int n, int mm) { return lower_bound_unit_fraction(n, mm).str(); });
    m.def("lower_bound_recurrence", [](int n, const std::string& eps) {
        return lower_bound_recurrence(n, rat_from_str(eps)).str();
    });
    m.def("closed_cube_lower_bound", [](int n, const std::string& eps) {
        return closed_cube_lower_bound(n, rat_from_str(eps)).str();
    });
    m.def("exact_value_2d",
          [](const std::string& eps) { return exact_value_2d(rat_from_str(eps)).str(); });
    m.def("exact_value_3d", [](const std::string& eps) -> py::object {
        auto v = exact_value_3d(rat_from_str(eps));
        if (!v) return py::none();
        return py::str(v->str());
    });
    m.def(
        "search_minimal_cover",
        [](int n, const std::string& eps, int q, long long budget) {
            SearchResult r = search_minimal_cover(n, rat_from_str(eps), q, budget);
            py::dict out;
            out["cover"] = r.cover;
            out["size"] = r.cover.size();
            out["proven_minimal"] = r.proven_minimal;
            out["nodes"] = r.nodes;
            return out;
        },
        py::arg("n"), py::arg("eps"), py::arg("q"), py::arg("budget") = 1000000);

    m.def("fractional_covering_number", [](int n, const std::string& eps) {
        return rational_string(fractional_covering_number(n, rat_from_str(eps)));
    });
    m.def(
        "lp_fractional_cover",
        [](int n, const std::string& eps, int k) {
            LpReport rep = lp_fractional_cover(n, rat_from_str(eps), k);
            py::dict out;
            out["primal"] = rational_string(rep.primal);
            out["dual"] = rational_string(rep.dual);
            out["gap"] = rational_string(rep.gap);
            out["grid_aligned"] = rep.grid_aligned;
            out["pivots"] = rep.pivots;
            return out;
        },
        py::arg("n"), py::arg("eps"), py::arg("k"));

    m.def("illumination_number_polydisc",
          [](int n) { return illumination_number_polydisc(n).str(); });
    m.def("fractional_number_polydisc",
          [](int n) { return fractional_number_polydisc(n).str(); });
    m.def("light_source_side", &light_source_side, py::arg("r"));
    m.def(
        "light_source_number",
        [](int n, double r, int grid) {
            LightSourceCount c = light_source_number(n, r, grid);
            py::dict out;
            out["eps"] = c.eps;
            out["lower"] = c.lower.str();
            if (c.exact) out["exact"] = c.exact->str();
            if (c.upper) out["upper"] = c.upper->str();
            return out;
        },
        py::arg("n"), py::arg("r"), py::arg("grid") = 0);
    m.def(
        "light_source_illuminates",
        [](const std::vector<std::string>& source_phases, double r,
           const std::vector<std::string>& point_phases) {
            std::vector<UnitRat> sp, xp;
            for (const auto& s : source_phases) sp.push_back(parse_unit_rational(s));
            for (const auto& s : point_phases) xp.push_back(parse_unit_rational(s));
            LightSource src{TorusPoint(std::move(sp)), r};
            Ternary t = light_source_illuminates(src, {TorusPoint(std::move(xp))});
            return t == Ternary::True ? "true" : t == Ternary::False ? "false" : "inconclusive";
        },
        py::arg("source_phases"), py::arg("r"), py::arg("point_phases"));
    m.def(
        "real_witness_for",
        [](const std::vector<int>& lambda, const std::vector<int>& signs) {
            RationalWitness w = real_witness_for(lambda, signs);
            py::dict out;
            out["dir_index"] = w.dir_index;
            out["t"] = rational_string(w.t);
            out["delta"] = rational_string(w.delta);
            std::vector<std::string> coeffs;
            for (const auto& c : w.coeffs) coeffs.push_back(rational_string(c));
            out["coeffs"] = coeffs;
            out["max_abs"] = rational_string(w.max_abs);
            return out;
        },
        py::arg("dependence"), py::arg("signs"));
    m.def("polydisc_directions", [](int n) {
        std::vector<std::string> out;
        for (const auto& d : direction_set_from_cover(construct_cover(n, 2)))
            out.push_back(to_string(d.phases));
        return out;
    });

    py::class_<CanonicalZonotope>(m, "CanonicalZonotope")
        .def_property_readonly("n", [](const CanonicalZonotope& k) { return k.n; })
        .def_property_readonly("field",
                               [](const CanonicalZonotope& k) {
                                   return k.field == Field::Real ? "real" : "complex";
                               })
        .def_property_readonly("generators",
                               [](const CanonicalZonotope& k) { return k.gens; })
        .def_property_readonly("dependence",
                               [](const CanonicalZonotope& k) { return k.lambda; })
        .def_property_readonly("residual",
                               [](const CanonicalZonotope& k) { return k.dependence_residual; });

    m.def(
        "reduce_to_canonical",
        [](const std::string& field, int n, const std::vector<std::vector<Cx>>& vecs) {
            Generators g;
            g.field = field == "real" ? Field::Real : Field::Complex;
            g.n = n;
            g.vecs = vecs;
            return reduce_to_canonical(g);
        },
        py::arg("field"), py::arg("n"), py::arg("generators"));
    m.def("canonical_zonotope", &canonical_from_lists, py::arg("field"), py::arg("n"),
          py::arg("generators"), py::arg("dependence"));
    m.def("real_illuminating_set", [](const CanonicalZonotope& K) {
        std::vector<std::vector<Cx>> out;
        for (const auto& d : real_illuminating_set(K).dirs) out.push_back(d.coeffs);
        return out;
    });
    m.def("complex_illuminating_set", [](const CanonicalZonotope& K) {
        std::vector<std::vector<Cx>> out;
        for (const auto& d : complex_illuminating_set(K).dirs) out.push_back(d.coeffs);
        return out;
    });
    m.def(
        "verify_illumination",
        [](const CanonicalZonotope& K, const std::vector<std::vector<Cx>>& dirs, int q,
           int threads) {
            DirectionSet ds;
            ds.n = K.n;
            for (const auto& c : dirs) {
                Direction d;
                d.coeffs = c;
                ds.dirs.push_back(std::move(d));
            }
            IlluminationReport rep = verify_illumination(K, ds, q, threads);
            py::dict out;
            out["pass"] = rep.pass;
            out["candidates"] = rep.candidates;
            if (rep.first_unilluminated) out["first_unilluminated"] = *rep.first_unilluminated;
            return out;
        },
        py::arg("zonotope"), py::arg("directions"), py::arg("q") = 24, py::arg("threads") = 1);
    m.def(
        "illuminates_canonical",
        [](const std::vector<Cx>& x, const std::vector<Cx>& v, const std::vector<int>& lambda)
            -> py::object {
            auto w = illuminates_canonical(x, v, lambda);
            if (!w) return py::none();
            py::dict out;
            out["t"] = w->t;
            out["delta"] = w->delta;
            out["coeffs"] = w->coeffs;
            out["max_mod"] = w->max_mod;
            return out;
        },
        py::arg("x"), py::arg("v"), py::arg("dependence"));
    m.def("fractional_measure_mass",
          [](const CanonicalZonotope& K) { return fractional_measure(K).total_mass; });
    m.def("min_enclosing_circle", [](const std::vector<Cx>& pts) {
        Circle c = min_enclosing_circle(pts);
        return py::make_tuple(c.center, c.radius);
    });

    m.def(
        "support_function",
        [](int n, const std::vector<std::vector<Cx>>& atoms, const std::vector<double>& weights,
           const std::vector<Cx>& theta) {
            return support_function(make_discrete_zonoid(n, atoms, weights), theta);
        },
        py::arg("n"), py::arg("atoms"), py::arg("weights"), py::arg("theta"));
    m.def(
        "complex_real_identity_check",
        [](const std::vector<Cx>& x, const std::vector<Cx>& y, int q) {
            IdentityReport rep = complex_real_identity_check(x, y, q);
            return py::make_tuple(rep.lhs, rep.rhs, rep.error);
        },
        py::arg("x"), py::arg("y"), py::arg("q") = 4096);

    m.attr("__version__") = "0.1.0";
}
