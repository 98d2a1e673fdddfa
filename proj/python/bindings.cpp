#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "orbi/center.hpp"
#include "orbi/coset_enum.hpp"
#include "orbi/homomorphisms.hpp"
#include "orbi/presentations.hpp"
#include "orbi/prover.hpp"
#include "orbi/quotients.hpp"
#include "orbi/suites.hpp"
#include "orbi/words.hpp"

namespace py = pybind11;
using namespace orbi;

namespace {

Word to_word(const py::object& x) {
  if (py::isinstance<Word>(x)) return x.cast<Word>();
  return parse_word(x.cast<std::string>());
}

py::dict proof_dict(const ProofResult& r) {
  py::dict d;
  d["proved"] = r.proved();
  d["nodes"] = r.stats.nodes;
  d["chain_len"] = r.chain.size();
  d["meet"] = r.meet.str();
  py::list steps;
  for (const auto& s : r.chain) {
    py::dict step;
    step["side"] = s.side;
    step["position"] = s.position;
    step["tag"] = s.tag;
    step["direction"] = s.direction();
    steps.append(step);
  }
  d["chain"] = steps;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Orbifold braid group presentations and verification";
  m.attr("__version__") = kToolVersion;

  py::register_exception<Error>(m, "OrbiError", PyExc_ValueError);

  py::class_<Word>(m, "Word")
      .def(py::init<>())
      .def(py::init([](const std::string& s) { return parse_word(s); }), py::arg("text"))
      .def("__str__", &Word::str)
      .def("__repr__", [](const Word& w) { return "Word('" + (w.empty() ? std::string("1") : w.str()) + "')"; })
      .def("__len__", &Word::size)
      .def("__eq__", [](const Word& a, const Word& b) { return a == b; })
      .def("__hash__", [](const Word& w) { return py::hash(py::str(w.str())); })
      .def("__mul__", [](const Word& a, const Word& b) { return a * b; })
      .def("__pow__", [](const Word& a, int k) { return power(a, k); })
      .def("inverse", [](const Word& w) { return invert(w); })
      .def("letters", [](const Word& w) {
        std::vector<std::pair<std::string, int>> out;
        for (const auto& l : w) out.emplace_back(l.gen.label(), l.sign);
        return out;
      });

  py::class_<Presentation>(m, "Presentation")
      .def_readonly("name", &Presentation::name)
      .def_readonly("params", &Presentation::params)
      .def_property_readonly("generators",
                             [](const Presentation& p) {
                               std::vector<std::string> out;
                               for (const auto& g : p.generators) out.push_back(g.label());
                               return out;
                             })
      .def_property_readonly("relations",
                             [](const Presentation& p) {
                               std::vector<std::tuple<Word, Word, std::string>> out;
                               for (const auto& r : p.relations) out.emplace_back(r.lhs, r.rhs, r.tag);
                               return out;
                             })
      .def("__str__", &format_presentation)
      .def_static("parse", &parse_presentation, py::arg("text"));

  m.def("orbifold_braid", &build_orbifold_braid, py::arg("n"), py::arg("L"), py::arg("cone_orders"));
  m.def("pure_orbifold", &build_pure_orbifold, py::arg("n"), py::arg("L"), py::arg("cone_orders"));
  m.def("two_cone", &build_prop32_presentation, py::arg("n"), py::arg("m"), py::arg("mprime"));
  m.def("two_cone_n3", &build_remark34_presentation, py::arg("m"), py::arg("mprime"));
  m.def("cone_puncture", &build_prop36_presentation, py::arg("n"), py::arg("m"));
  m.def("one_cone", &build_cor35_presentation, py::arg("n"), py::arg("m"));
  m.def("expand_pure", [](const py::object& w) { return expand_pure_word(to_word(w)); });

  m.def(
      "prove",
      [](const Presentation& p, const py::object& a, const py::object& b, std::int64_t max_nodes, int slack) {
        ProverBudget budget;
        budget.max_nodes = max_nodes;
        budget.slack = slack;
        const Word x = to_word(a), y = to_word(b);
        ProofResult r;
        {
          py::gil_scoped_release release;
          r = prove_equal(p, x, y, budget);
        }
        auto d = proof_dict(r);
        d["replayed"] = r.proved() && verify_proof(p, {}, x, y, r);
        return d;
      },
      py::arg("presentation"), py::arg("lhs"), py::arg("rhs"), py::arg("max_nodes") = 1'000'000,
      py::arg("slack") = 8);

  m.def(
      "normal_form",
      [](const Presentation& p, const py::object& w) {
        const auto f = semidirect_normal_form(p, to_word(w));
        return py::make_tuple(f.normal_part, f.quotient_exponents);
      },
      py::arg("presentation"), py::arg("word"));
  m.def("u_exponent", [](const py::object& w, int mod) { return u_exponent(to_word(w), mod); }, py::arg("word"),
        py::arg("m"));

  m.def("theta", [](int n, int mod) { return orbi::theta(n, mod); }, py::arg("n"), py::arg("m"));
  m.def("gamma", [](int j, int n, int mod) { return orbi::gamma(j, n, mod); }, py::arg("j"), py::arg("n"), py::arg("m"));
  m.def("gamma_pure", &gamma_pure, py::arg("j"));
  m.def("pure_degree", [](const py::object& w) { return pure_degree(to_word(w)); }, py::arg("word"));
  m.def(
      "theta_membership",
      [](int n, int mod, int k) {
        const auto r = theta_power_membership(n, mod, k);
        py::dict d;
        d["member"] = r.member;
        d["l"] = r.l;
        d["quotient_exponent"] = r.quotient_exponent;
        d["normal_form_exponent"] = r.normal_form_exponent;
        return d;
      },
      py::arg("n"), py::arg("m"), py::arg("k"));

  m.def(
      "wreath_eval",
      [](const Presentation& p, const py::object& w, bool track_punctures) {
        const auto x = evaluate_word(WreathAssignment::standard_for(p, track_punctures), to_word(w));
        return py::make_tuple(x.perm(), x.exps());
      },
      py::arg("presentation"), py::arg("word"), py::arg("track_punctures") = true);
  m.def(
      "relations_hold",
      [](const Presentation& p) { return check_relations_in_quotient(p, WreathAssignment::standard_for(p)).pass; },
      py::arg("presentation"));
  m.def("order_G", &order_G, py::arg("m"), py::arg("p"), py::arg("n"));
  m.def(
      "coset_order",
      [](const Presentation& p, std::int64_t max_cosets) -> std::optional<std::int64_t> {
        const auto r = enumerate_order(p, max_cosets);
        if (r.status != EnumStatus::Complete) return std::nullopt;
        return r.order;
      },
      py::arg("presentation"), py::arg("max_cosets") = 1'000'000);
  m.def("coxeterize", [](const Presentation& p) { return coxeterize(p); }, py::arg("presentation"));

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite_json",
      [](const std::string& name, int n, int mod, int mp, int L) {
        SuiteParams sp;
        sp.n = n;
        sp.m = mod;
        sp.mp = mp;
        sp.L = L;
        py::gil_scoped_release release;
        return run_suite(name, sp).to_json();
      },
      py::arg("name"), py::arg("n") = 0, py::arg("m") = 2, py::arg("mp") = 2, py::arg("L") = 0);
}
