#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kflag/ddo.hpp"
#include "kflag/errors.hpp"
#include "kflag/gkm.hpp"
#include "kflag/groth.hpp"
#include "kflag/io.hpp"
#include "kflag/kirwan.hpp"

namespace py = pybind11;
using namespace kflag;

namespace {

std::vector<int> images(const Permutation& w) { return {w.images().begin(), w.images().end()}; }

std::vector<Permutation> as_list(const SupportSet& s) { return {s.begin(), s.end()}; }

std::string dump(const io::Json& j) { return io::dump(j); }

} // namespace

PYBIND11_MODULE(_kflag, m) {
    m.doc() = "Double Grothendieck polynomials, fixed-point localization and weight-variety presentations.";

    auto base = py::register_exception<Error>(m, "KflagError");
    py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
    py::register_exception<LimitExceeded>(m, "LimitExceeded", base.ptr());
    py::register_exception<NotDivisible>(m, "NotDivisible", base.ptr());
    py::register_exception<NotInSpan>(m, "NotInSpan", base.ptr());
    py::register_exception<NotRegular>(m, "NotRegular", base.ptr());
    py::register_exception<SoundnessFailure>(m, "SoundnessFailure", base.ptr());
    py::register_exception<InternalError>(m, "InternalError", base.ptr());

    py::class_<Permutation>(m, "Permutation")
        .def(py::init<std::vector<int>>(), py::arg("images"))
        .def_static("parse", [](const std::string& s) { return io::parse_permutation(s); })
        .def_static("identity", &Permutation::identity)
        .def_static("longest", &Permutation::longest)
        .def_static("simple", &Permutation::simple)
        .def_property_readonly("rank", &Permutation::rank)
        .def_property_readonly("images", &images)
        .def("__call__", [](const Permutation& w, int i) {
            if (i < 1 || i > w.rank()) throw py::index_error("index out of range");
            return w(i);
        })
        .def("__mul__", [](const Permutation& u, const Permutation& v) { return compose(u, v); })
        .def("inverse", [](const Permutation& w) { return inverse(w); })
        .def("length", [](const Permutation& w) { return length(w); })
        .def("reduced_word", [](const Permutation& w) { return canonical_reduced_word(w); })
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__hash__", [](const Permutation& w) { return PermutationHash{}(w); })
        .def("__str__", &Permutation::to_string)
        .def("__repr__", [](const Permutation& w) { return "Permutation([" + w.to_string() + "])"; });

    m.def("word_product", [](int n, const std::vector<int>& letters) { return word_product(n, letters); });
    m.def("bruhat_leq", &bruhat_leq, py::arg("v"), py::arg("w"));
    m.def("permuted_bruhat_leq", &permuted_bruhat_leq, py::arg("v"), py::arg("w"), py::arg("gamma"));
    m.def("enumerate", [](int n) { return enumerate(n); }, py::arg("n"));

    py::class_<LaurentPoly>(m, "LaurentPoly")
        .def(py::init<int>(), py::arg("n"))
        .def_static("one", &LaurentPoly::one)
        .def_static("constant", [](int n, const std::string& c) { return LaurentPoly::constant(n, mpz_class(c)); })
        .def_static("x", &LaurentPoly::x, py::arg("n"), py::arg("i"), py::arg("power") = 1)
        .def_static("y", &LaurentPoly::y, py::arg("n"), py::arg("i"), py::arg("power") = 1)
        .def_static("from_json",
                    [](const std::string& text) { return io::poly_from_json(io::Json::parse(text)); })
        .def("to_json", [](const LaurentPoly& f) { return dump(io::to_json(f)); })
        .def_property_readonly("rank", &LaurentPoly::rank)
        .def("is_zero", &LaurentPoly::is_zero)
        .def("__len__", &LaurentPoly::size)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", &LaurentPoly::to_string)
        .def("__repr__", [](const LaurentPoly& f) { return "LaurentPoly(" + f.to_string() + ")"; });

    m.def("delta", &delta, py::arg("i"), py::arg("f"));
    m.def("pi", &pi, py::arg("i"), py::arg("f"));
    m.def("pi_word", &pi_word, py::arg("w"), py::arg("f"));
    m.def("pi_along", [](const std::vector<int>& word, const LaurentPoly& f) { return pi_along(word, f); },
          py::arg("word"), py::arg("f"));

    m.def("top", &top, py::arg("n"));
    m.def("grothendieck", [](const Permutation& w) { return shared_cache().get(w); }, py::arg("w"));
    m.def("permuted_grothendieck",
          [](const Permutation& w, const Permutation& gamma) { return shared_cache().permuted(w, gamma); },
          py::arg("w"), py::arg("gamma"));

    m.def("restrict", &restrict_at, py::arg("f"), py::arg("z"));
    m.def("restrict_all", [](const LaurentPoly& f) { return dump(io::to_json(restrict_all(f))); }, py::arg("f"),
          "Restriction class as JSON.");
    m.def("support", [](const LaurentPoly& f) { return as_list(support(f)); }, py::arg("f"));
    m.def("canonical_zero_test", &canonical_zero_test, py::arg("f"));

    m.def(
        "verify_support_theorem",
        [](int n, int jobs) {
            SupportReport report;
            {
                py::gil_scoped_release release;
                report = verify_support_theorem(n, jobs, kDefaultVerifyBound, &shared_cache());
            }
            return py::make_tuple(report.all_pass(), report.pairs.size(), dump(io::to_json(report)));
        },
        py::arg("n"), py::arg("jobs") = 1, "Returns (all_pass, pair_count, report_json).");

    m.def(
        "decompose",
        [](const std::string& class_json, const Permutation& gamma) {
            const auto alpha = io::restriction_class_from_json(io::Json::parse(class_json));
            const auto d = decompose(alpha, gamma, &shared_cache());
            return std::vector<std::pair<Permutation, LaurentPoly>>(d.begin(), d.end());
        },
        py::arg("class_json"), py::arg("gamma"));

    m.def(
        "is_regular",
        [](const std::string& lambda, const std::string& mu) {
            return is_regular(io::parse_weights(lambda), io::parse_weights(mu)).regular;
        },
        py::arg("lambda_"), py::arg("mu"));

    m.def(
        "kernel_generators",
        [](const std::string& lambda, const std::string& mu, int jobs) {
            const auto l = io::parse_weights(lambda), u = io::parse_weights(mu);
            std::vector<KernelGenerator> gens;
            {
                py::gil_scoped_release release;
                gens = kernel_generators(l, u, jobs, &shared_cache());
                for (const auto& g : gens) half_space_soundness(g, l, u);
            }
            return dump(io::to_json(gens));
        },
        py::arg("lambda_"), py::arg("mu"), py::arg("jobs") = 1, "Kernel generators as JSON.");

    m.def(
        "presentation",
        [](const std::string& lambda, const std::string& mu, int jobs) {
            const auto l = io::parse_weights(lambda), u = io::parse_weights(mu);
            py::gil_scoped_release release;
            const auto p = presentation(l, u, jobs, &shared_cache());
            for (const auto& g : p.kernel) half_space_soundness(g, l, u);
            return dump(io::to_json(p));
        },
        py::arg("lambda_"), py::arg("mu"), py::arg("jobs") = 1, "Presentation as JSON.");
}
