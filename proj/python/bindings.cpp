// Python bindings for the main operations.  Reports cross the boundary as
// plain dicts via their JSON form so the schema stays single-sourced.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lacunae/errors.hpp"
#include "lacunae/json_io.hpp"
#include "lacunae/magnus.hpp"

namespace py = pybind11;
using namespace lacunae;

namespace {

py::object json_to_py(const std::string& text) {
    py::module_ json = py::module_::import("json");
    return json.attr("loads")(text);
}

LengthFunction length_of(const std::string& spec) { return parse_length(spec); }

py::object gram_to_py(const GramReport& report) {
    JsonWriter w;
    write_gram_report(w, report);
    return json_to_py(w.str());
}

py::object cert_to_py(const LacunarityCertificate& cert) {
    JsonWriter w;
    write_certificate(w, cert);
    return json_to_py(w.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact free-group Fourier analysis: words, truncated series, "
              "bi-invariant order, lacunarity certificates and norm estimates";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<UndecidedOrderError>(m, "UndecidedOrderError", PyExc_RuntimeError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<Word>(m, "Word")
        .def(py::init([](int rank, const std::string& text) {
                 return parse_word(rank, text);
             }),
             py::arg("rank"), py::arg("text") = "")
        .def_static("generator",
                    [](int rank, int gen, long long exp) {
                        return Word::generator(rank, gen, Integer(exp));
                    },
                    py::arg("rank"), py::arg("gen"), py::arg("exp") = 1)
        .def_property_readonly("rank", &Word::rank)
        .def_property_readonly("is_identity", &Word::is_identity)
        .def("length", [](const Word& g) { return g.length().str(); })
        .def("__mul__", &multiply)
        .def("inverse", &inverse)
        .def("__pow__", [](const Word& g, long long n) { return power(g, Integer(n)); })
        .def("__eq__", [](const Word& a, const Word& b) { return a == b; })
        .def("__hash__", [](const Word& g) { return py::hash(py::str(to_string(g))); })
        .def("__str__", [](const Word& g) { return to_string(g); })
        .def("__repr__", [](const Word& g) {
            return "Word(" + std::to_string(g.rank()) + ", '" + to_string(g) + "')";
        });

    m.def("reduce", [](int rank, const std::vector<std::pair<int, long long>>& syllables) {
        std::vector<Syllable> syls;
        for (const auto& [gen, exp] : syllables) syls.push_back({gen, Integer(exp)});
        return reduce(rank, syls);
    });
    m.def("ball", [](int rank, int radius) { return ball(rank, radius); },
          py::arg("rank"), py::arg("radius"));
    m.def("evaluate_length",
          [](const std::string& kind, const Word& g) { return length_of(kind)(g); },
          py::arg("kind"), py::arg("word"));

    m.def("magnus_embed",
          [](const Word& g, int degree) {
              NCPolynomial mu = magnus_embed(g, degree > 0 ? degree
                                                           : default_truncation_degree(g));
              py::dict terms;
              for (const auto& [mono, coeff] : mu.terms())
                  terms[py::str(monomial_name(mono, mu.rank()))] = py::int_(py::str(coeff.str()));
              py::dict out;
              out["rank"] = mu.rank();
              out["truncation_degree"] = mu.truncation_degree();
              out["terms"] = terms;
              out["text"] = mu.to_string();
              return out;
          },
          py::arg("word"), py::arg("degree") = 0);
    m.def("j_coefficient",
          [](const Word& g, const std::string& monomial) {
              return py::int_(py::str(j_coefficient(g, parse_monomial(monomial, g.rank())).str()));
          },
          py::arg("word"), py::arg("monomial"));
    m.def("subgroup_membership", [](const Word& g) {
        SubgroupMembership s = subgroup_membership(g);
        return py::make_tuple(s.in_f0, s.in_f00);
    });
    m.def("transference_check", &transference_check);

    m.def("order_compare",
          [](const Word& g, const Word& h, int max_degree) {
              OrderVerdict v = order_compare(g, h, max_degree);
              JsonWriter w;
              write_order_verdict(w, v, g.rank());
              return json_to_py(w.str());
          },
          py::arg("g"), py::arg("h"), py::arg("max_degree") = 0);
    m.def("is_positive", &is_positive, py::arg("word"), py::arg("max_degree") = 0);

    py::class_<FourierElement>(m, "FourierElement")
        .def(py::init<int, int>(), py::arg("rank"), py::arg("dim") = 1)
        .def_property_readonly("rank", &FourierElement::rank)
        .def_property_readonly("dim", &FourierElement::coeff_dim)
        .def_property_readonly("support_size", &FourierElement::support_size)
        .def("add", [](FourierElement& x, const Word& g, std::complex<double> c) {
            x += FourierElement::delta(g, c);
        })
        .def("add_matrix", [](FourierElement& x, const Word& g, const Eigen::MatrixXcd& c) {
            x.add_term(g, c);
        })
        .def("coefficient", &FourierElement::coefficient)
        .def("trace", &FourierElement::trace)
        .def("__add__", [](FourierElement a, const FourierElement& b) { return a += b; })
        .def("__mul__", &fmultiply)
        .def("adjoint", &fadjoint)
        .def("to_json", [](const FourierElement& x) {
            JsonWriter w;
            write_fourier(w, x);
            return json_to_py(w.str());
        });

    m.def("fourier_from_json", [](const std::string& text) { return parse_fourier_json(text); });
    m.def("apply_semigroup",
          [](const FourierElement& x, const std::string& kind, double t) {
              return apply_multiplier(MultiplierSpec::semigroup(length_of(kind), t), x);
          },
          py::arg("x"), py::arg("length"), py::arg("t"));
    m.def("trace_moment",
          [](const FourierElement& x, int m) { return trace_moment(x, m); },
          py::arg("x"), py::arg("m"));
    m.def("h1_integrand", [](const FourierElement& x, const std::string& kind) {
        return h1_integrand(x, length_of(kind));
    });
    m.def("bmo_defect", [](const FourierElement& x, const std::string& kind, double t) {
        return bmo_defect(x, length_of(kind), t);
    });
    m.def("c_delta", &c_delta);
    m.def("positive_part_split", [](const FourierElement& x) {
        auto [pos, neg] = positive_part_split(x);
        return py::make_tuple(pos, neg);
    });

    m.def("cnd_gram_test",
          [](const std::string& kind, const std::vector<Word>& words, double tol) {
              return gram_to_py(cnd_gram_test(length_of(kind), words, tol));
          },
          py::arg("length"), py::arg("words"), py::arg("tolerance") = 0.0);
    m.def("schoenberg_test",
          [](const std::string& kind, const std::vector<Word>& words,
             const std::vector<double>& grid, double tol) {
              JsonWriter w;
              write_schoenberg_report(w, schoenberg_test(length_of(kind), words, grid, tol));
              return json_to_py(w.str());
          },
          py::arg("length"), py::arg("words"), py::arg("t_grid"),
          py::arg("tolerance") = 1e-9);

    m.def("psi_lacunary_delta",
          [](const std::string& kind, const std::vector<Word>& seq) {
              return cert_to_py(psi_lacunary_delta(length_of(kind), seq));
          },
          py::arg("length"), py::arg("sequence"));
    m.def("integer_lacunary", [](const std::vector<long long>& values) {
        std::vector<Integer> ints(values.begin(), values.end());
        return cert_to_py(integer_lacunary(ints));
    });
    m.def("rudin_count",
          [](const std::vector<Word>& set, const Word& g) { return rudin_count(set, g); });
    m.def("rudin_lacunarity_estimate", [](const std::vector<Word>& set) {
        return cert_to_py(rudin_lacunarity_estimate(set));
    });
    m.def("prop51_check",
          [](const std::vector<Word>& seq) { return cert_to_py(prop51_check(seq)); });

    m.def("operator_norm_estimate",
          [](const FourierElement& x, int radius) {
              NormEstimate est = operator_norm_estimate(x, radius);
              JsonWriter w;
              write_norm_estimate(w, est);
              return json_to_py(w.str());
          },
          py::arg("x"), py::arg("radius") = 8);
    m.def("h1_norm_estimate",
          [](const FourierElement& x, const std::string& kind, int radius) {
              JsonWriter w;
              write_spectral_report(w, h1_norm_estimate(x, length_of(kind), radius));
              return json_to_py(w.str());
          },
          py::arg("x"), py::arg("length") = "word", py::arg("radius") = 8);
    m.def("bmo_norm_estimate",
          [](const FourierElement& x, const std::string& kind, int radius) {
              LengthFunction psi = length_of(kind);
              BmoEstimate est = bmo_norm_estimate(x, psi, default_t_grid(x, psi), radius);
              JsonWriter w;
              write_bmo_estimate(w, est);
              return json_to_py(w.str());
          },
          py::arg("x"), py::arg("length") = "word", py::arg("radius") = 8);

    m.def("theorem1_check",
          [](const std::vector<Word>& seq, const std::vector<Eigen::MatrixXcd>& coeffs,
             const std::string& kind, int radius) {
              PaleyConfig config;
              config.radius = radius;
              JsonWriter w;
              write_paley_report(w, theorem1_check(seq, coeffs, length_of(kind), config));
              return json_to_py(w.str());
          },
          py::arg("sequence"), py::arg("coefficients"), py::arg("length") = "word",
          py::arg("radius") = 8);
    m.def("lambda4_check",
          [](const std::vector<Word>& seq, const std::vector<Eigen::MatrixXcd>& coeffs,
             const std::string& kind) {
              JsonWriter w;
              write_lambda4_report(w, lambda4_check(seq, coeffs, length_of(kind)));
              return json_to_py(w.str());
          },
          py::arg("sequence"), py::arg("coefficients"), py::arg("length") = "word");
    m.def("paley_split",
          [](const FourierElement& y, const FourierElement& z, const std::vector<Word>& targets) {
              JsonWriter w;
              write_split_report(w, paley_split(y, z, targets));
              return json_to_py(w.str());
          });
    m.def("reh1_norm", [](const FourierElement& x, int radius) {
        JsonWriter w;
        write_reh1_report(w, reh1_norm(x, radius));
        return json_to_py(w.str());
    }, py::arg("x"), py::arg("radius") = 8);
    m.def("jab_decomposition", [](const FourierElement& x) {
        JabDecomposition d = jab_decomposition(x);
        return py::make_tuple(d.p0, d.p00, d.ab_plus, d.ab_minus);
    });
    m.def("coefficient_gap_demo", &coefficient_gap_demo);

#ifdef LACUNAE_VERSION
    m.attr("__version__") = LACUNAE_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
