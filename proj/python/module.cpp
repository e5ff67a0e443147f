// Python bindings for the main operations. Expressions cross the boundary as
// canonical strings; integers as python ints via their decimal form.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rank2/diophantine.hpp"
#include "rank2/dvector.hpp"
#include "rank2/engine.hpp"
#include "rank2/errors.hpp"
#include "rank2/exchange_matrix.hpp"
#include "rank2/expr.hpp"
#include "rank2/invariants.hpp"

namespace py = pybind11;
using namespace rank2;

namespace {

std::string lf_text(const LaurentFraction& lf) { return to_ratfunc(lf).str(); }

py::int_ to_py(const Integer& z) { return py::int_(py::str(z.get_str())); }

py::dict cluster_dict(const ClusterEnumeration& e) {
    py::dict out;
    out["period"] = e.period ? py::object(py::int_(*e.period)) : py::none();
    py::list clusters;
    for (const Seed& s : e.labeled_clusters)
        clusters.append(py::make_tuple(lf_text(s.var1), lf_text(s.var2)));
    out["clusters"] = clusters;
    return out;
}

SymmetricCombiner make_combiner(const std::string& kind, long index,
                                const std::string& scale) {
    const RationalFunction c = parse_ratfunc(scale);
    if (!c.is_constant()) throw PreconditionViolated("scale must be a constant");
    if (kind == "power_sum") return SymmetricCombiner::power_sum(index, c.constant_value());
    if (kind == "elementary")
        return SymmetricCombiner::elementary(index, c.constant_value());
    throw PreconditionViolated("combiner kind must be power_sum or elementary");
}

DioEquation resolve_equation(const std::string& preset, const std::string& expr,
                             long m, long n, long a, long b) {
    if (!preset.empty()) return dio_preset(preset);
    return make_dio_equation("custom", parse_ratfunc(expr), m, n,
                             {Integer(a), Integer(b)});
}

}  // namespace

PYBIND11_MODULE(rank2ca, mod) {
    mod.doc() = "exact rank-2 cluster algebra toolkit";

    py::register_exception<Error>(mod, "DomainError");

    mod.def("parse_canonical",
            [](const std::string& text) { return print_canonical(parse_ratfunc(text)); },
            py::arg("expr"), "parse an expression and return its canonical form");

    mod.def("walk",
            [](long m, long n, const std::string& word) {
                py::list out;
                for (const Seed& s : walk(m, n, word))
                    out.append(py::make_tuple(lf_text(s.var1), lf_text(s.var2)));
                return out;
            },
            py::arg("m"), py::arg("n"), py::arg("word"));

    mod.def("clusters",
            [](long m, long n, long max_steps) {
                return cluster_dict(enumerate_clusters(m, n, max_steps));
            },
            py::arg("m"), py::arg("n"), py::arg("max_steps") = 64);

    mod.def("maction",
            [](long m, long n, const std::string& word) {
                std::pair<LaurentFraction, LaurentFraction> cur{lf_var(1), lf_var(2)};
                for (char c : word) {
                    if (c != '1' && c != '2')
                        throw PreconditionViolated("words are strings over {1,2}");
                    cur = m_action_laurent(cur, c - '0', m, n);
                }
                return py::make_tuple(lf_text(cur.first), lf_text(cur.second));
            },
            py::arg("m"), py::arg("n"), py::arg("word"));

    mod.def("mutation_maction_equivalent",
            [](long m, long n, long k_max) {
                return check_mutation_maction_equivalence(m, n, k_max).ok;
            },
            py::arg("m"), py::arg("n"), py::arg("k_max"));

    mod.def("classify",
            [](long m, long n) { return std::string(to_string(classify(m, n))); },
            py::arg("m"), py::arg("n"));

    mod.def("dvectors",
            [](long m, long n, long k_max) {
                py::dict out;
                for (const DvRow& r : dvectors_recurrence(m, n, k_max))
                    out[py::int_(r.position)] = py::make_tuple(
                        py::make_tuple(to_py(r.v1.e1), to_py(r.v1.e2)),
                        py::make_tuple(to_py(r.v2.e1), to_py(r.v2.e2)));
                return out;
            },
            py::arg("m"), py::arg("n"), py::arg("k_max"));

    mod.def("dvectors_closed_form",
            [](long m, long n, long k) {
                const ClosedQuad q = dvectors_closed_form(m, n, k);
                auto pair = [](const DVector& v) {
                    return py::make_tuple(to_py(v.e1), to_py(v.e2));
                };
                py::dict out;
                out["even"] = py::make_tuple(pair(q.d1_even), pair(q.d2_even));
                out["odd"] = py::make_tuple(pair(q.d1_odd), pair(q.d2_odd));
                return out;
            },
            py::arg("m"), py::arg("n"), py::arg("k"));

    mod.def("verify_invariant",
            [](const std::string& expr, long m, long n) {
                return verify_invariant(parse_ratfunc(expr), m, n);
            },
            py::arg("expr"), py::arg("m"), py::arg("n"));

    mod.def("construct_invariant",
            [](long m, long n, const std::string& f, const std::string& kind,
               long index, const std::string& scale) {
                const RationalFunction kernel =
                    to_ratfunc(parse_with_vars(f, {"X1", "X2"}));
                return print_canonical(construct_invariant(
                    m, n, kernel, make_combiner(kind, index, scale)));
            },
            py::arg("m"), py::arg("n"), py::arg("f"),
            py::arg("kind") = "power_sum", py::arg("index") = 1,
            py::arg("scale") = "1");

    mod.def("search_invariants",
            [](long m, long n, long s, long t) {
                py::list out;
                for (const auto& cand : search_laurent_invariants(m, n, s, t)) {
                    py::dict entry;
                    entry["expr"] = print_canonical(cand.value);
                    if (cand.laurent) {
                        entry["s"] = cand.laurent->s;
                        entry["t"] = cand.laurent->t;
                    }
                    out.append(entry);
                }
                return out;
            },
            py::arg("m"), py::arg("n"), py::arg("s"), py::arg("t"));

    mod.def("decompose_a1a1",
            [](const std::string& expr) {
                return decompose_a1a1(parse_ratfunc(expr)).str("X1", "X2");
            },
            py::arg("expr"));

    mod.def("decompose_half",
            [](const std::string& expr, int var) {
                const RationalFunction f = parse_ratfunc(expr);
                const int v = var ? var : detect_single_variable(f);
                return decompose_half_invariant(f, v).str("X", "");
            },
            py::arg("expr"), py::arg("var") = 0);

    mod.def("dio_solve",
            [](const std::string& preset, long bound, const std::string& expr,
               long m, long n, long a, long b) {
                const DioEquation eq = resolve_equation(preset, expr, m, n, a, b);
                const Orbit orbit = enumerate_orbit(eq, Integer(bound));
                py::list solutions;
                for (const OrbitNode& node : orbit.nodes) {
                    py::dict entry;
                    entry["pair"] = py::make_tuple(to_py(node.pair.first),
                                                   to_py(node.pair.second));
                    entry["word"] = node.word;
                    solutions.append(entry);
                }
                py::dict out;
                out["solutions"] = solutions;
                out["complete_within_bound"] = orbit.closed;
                return out;
            },
            py::arg("preset") = "", py::arg("bound") = 100, py::arg("expr") = "",
            py::arg("m") = 0, py::arg("n") = 0, py::arg("a") = 1, py::arg("b") = 1);

    mod.def("dio_certify",
            [](const std::string& preset, long bound, const std::string& expr,
               long m, long n, long a, long b, int threads) {
                const DioEquation eq = resolve_equation(preset, expr, m, n, a, b);
                return certify_completeness(eq, Integer(bound), threads);
            },
            py::arg("preset") = "", py::arg("bound") = 100, py::arg("expr") = "",
            py::arg("m") = 0, py::arg("n") = 0, py::arg("a") = 1, py::arg("b") = 1,
            py::arg("threads") = 1);

    mod.def("check_imr",
            [](const std::vector<std::vector<long>>& rows, long depth) {
                return check_imr(ExchangeMatrix::from_rows(rows), depth).imr;
            },
            py::arg("matrix"), py::arg("depth") = 8);
}
