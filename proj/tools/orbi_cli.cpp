// orbi: command-line front end for presentations, the equality prover,
// homomorphism checks, normal forms, quotients, coset enumeration and the
// verification suites.
//
// Exit codes: 0 pass, 1 failure or disproof, 2 unknown, 3 overflow, 4 usage.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orbi/center.hpp"
#include "orbi/coset_enum.hpp"
#include "orbi/homomorphisms.hpp"
#include "orbi/presentations.hpp"
#include "orbi/prover.hpp"
#include "orbi/quotients.hpp"
#include "orbi/suites.hpp"

using namespace orbi;
using json = nlohmann::ordered_json;

namespace {

constexpr int kPass = 0, kFail = 1, kUnknown = 2, kOverflow = 3, kUsage = 4;

struct PresentationArgs {
  std::string family = "orbifold_braid";
  std::string file;
  int n = 3;
  int L = 0;
  std::vector<int> cones{2};
  int m = 2;
  int mp = 2;
  bool squares = false;

  void attach(CLI::App* app) {
    app->add_option("--family", family,
                    "orbifold_braid | pure_orbifold | two_cone | cone_puncture | one_cone | three_strand | artin_path");
    app->add_option("--pres,--file", file, "read the presentation from a file instead");
    app->add_option("--n", n, "strands (vertices for artin_path)");
    app->add_option("--L", L, "punctures");
    app->add_option("--cones", cones, "cone orders, e.g. --cones 3 2")->delimiter(',');
    app->add_option("--m", m, "cone order m");
    app->add_option("--mp", mp, "second cone order m'");
    app->add_flag("--squares", squares, "add x^2 = 1 for every reflection-like generator");
  }

  Presentation build() const {
    Presentation p;
    if (!file.empty()) {
      p = read_presentation_file(file);
    } else if (family == "orbifold_braid") {
      p = build_orbifold_braid(n, L, cones);
    } else if (family == "pure_orbifold") {
      p = build_pure_orbifold(n, L, cones);
    } else if (family == "two_cone") {
      p = build_prop32_presentation(n, m, mp);
    } else if (family == "cone_puncture") {
      p = build_prop36_presentation(n, m);
    } else if (family == "one_cone") {
      p = build_cor35_presentation(n, m);
    } else if (family == "three_strand") {
      p = build_remark34_presentation(m, mp);
    } else if (family == "artin_path") {
      p = artin_from_graph(path_graph(n));
    } else {
      throw Error("unknown family '" + family + "'");
    }
    return squares ? coxeterize(p) : p;
  }
};

struct BudgetArgs {
  ProverBudget budget = ProverBudget::from_env();
  void attach(CLI::App* app) {
    app->add_option("--max-nodes", budget.max_nodes, "node budget (env ORBI_MAX_NODES)");
    app->add_option("--slack", budget.slack, "length slack over the longer operand (env ORBI_SLACK)");
    app->add_option("--max-length", budget.max_word_length, "absolute word length bound, 0 for slack");
  }
};

void write_json(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream os(path);
  if (!os) throw Error("cannot write " + path);
  os << text << "\n";
}

json step_json(const ProofStep& s) {
  return {{"side", s.side},   {"position", s.position}, {"source", s.source}, {"lemma", s.lemma},
          {"inverse", s.inverse}, {"rotation", s.rotation}, {"split", s.split}, {"tag", s.tag},
          {"direction", s.direction()}};
}

// Lines "gen -> word"; blank lines and lines starting with # are skipped.
Assignment read_assignment(const std::string& path, const Presentation& source, const Presentation& target) {
  std::ifstream is(path);
  if (!is) throw Error("cannot read " + path);
  Assignment a{source, target, {}};
  std::string line;
  while (std::getline(is, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) throw Error("bad map line: " + line);
    auto trim = [](std::string x) {
      const auto b = x.find_first_not_of(" \t"), e = x.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
    };
    a.images[parse_generator(trim(line.substr(0, arrow)))] = parse_word(trim(line.substr(arrow + 2)));
  }
  a.validate();
  return a;
}

json presentation_json(const Presentation& p) {
  json j;
  j["name"] = p.name;
  j["params"] = p.params;
  auto gens = json::array();
  for (const auto& g : p.generators) gens.push_back(g.label());
  j["generators"] = gens;
  auto rels = json::array();
  for (const auto& r : p.relations) rels.push_back({{"tag", r.tag}, {"lhs", r.lhs.str()}, {"rhs", r.rhs.str()}});
  j["relations"] = rels;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbifold braid group presentations and verification"};
  app.require_subcommand(1);
  std::string json_path;
  app.add_option("--json", json_path, "write a machine-readable report to PATH");

  // emit
  auto* emit = app.add_subcommand("emit", "print a presentation");
  PresentationArgs emit_p;
  emit_p.attach(emit);
  std::string emit_out;
  emit->add_option("--out", emit_out, "write the presentation file here");
  emit->add_option("--json", json_path, "write JSON to PATH");

  // prove
  auto* prove = app.add_subcommand("prove", "search for a rewrite chain between two words");
  PresentationArgs prove_p;
  prove_p.attach(prove);
  BudgetArgs prove_b;
  prove_b.attach(prove);
  std::string lhs_text, rhs_text, chain_path;
  prove->add_option("--lhs", lhs_text, "left word, e.g. h1*h2^-1")->required();
  prove->add_option("--rhs", rhs_text, "right word, empty for the identity");
  prove->add_option("--emit-chain", chain_path, "write the chain as JSON lines");
  prove->add_option("--json", json_path, "write JSON to PATH");

  // verify-hom
  auto* vhom = app.add_subcommand("verify-hom", "check that an assignment preserves the relations");
  std::string pair_name = "two_cone", direction = "psi";
  int vh_n = 3, vh_m = 2, vh_mp = 2;
  BudgetArgs vhom_b;
  vhom_b.attach(vhom);
  vhom->add_option("--pair", pair_name, "two_cone | cone_puncture | one_cone");
  vhom->add_option("--direction", direction, "phi | psi");
  vhom->add_option("--n", vh_n, "strands");
  vhom->add_option("--m", vh_m, "cone order m");
  vhom->add_option("--mp", vh_mp, "second cone order m'");
  std::string map_source, map_target, map_file;
  vhom->add_option("--source", map_source, "source presentation file (with --map)");
  vhom->add_option("--target", map_target, "target presentation file (with --map)");
  vhom->add_option("--map", map_file, "assignment file with one 'gen -> word' per line");
  vhom->add_option("--json", json_path, "write JSON to PATH");

  // normal-form
  auto* nf = app.add_subcommand("normal-form", "semidirect normal form of a word");
  PresentationArgs nf_p;
  nf_p.family = "two_cone";
  nf_p.attach(nf);
  std::string nf_word;
  nf->add_option("--word", nf_word, "word to normalize")->required();
  nf->add_option("--json", json_path, "write JSON to PATH");

  // quotient
  auto* quot = app.add_subcommand("quotient", "wreath-product quotient and G(m,p,n)");
  quot->require_subcommand(1);
  auto* qeval = quot->add_subcommand("eval", "image of a word");
  PresentationArgs qe_p;
  qe_p.attach(qeval);
  std::string qe_word;
  bool track_punctures = false;
  qeval->add_option("--word", qe_word, "word to evaluate")->required();
  qeval->add_flag("--track-punctures", track_punctures, "give each puncture a free Z coordinate");
  qeval->add_option("--json", json_path, "write JSON to PATH");
  auto* qcheck = quot->add_subcommand("check", "every relation maps to the identity");
  PresentationArgs qc_p;
  qc_p.attach(qcheck);
  qcheck->add_option("--json", json_path, "write JSON to PATH");
  auto* qenum = quot->add_subcommand("enum", "order of G(m,p,n) by enumeration");
  int qm = 2, qp = 1, qn = 2;
  qenum->add_option("--m", qm, "root-of-unity order m");
  qenum->add_option("--p", qp, "exponent-sum modulus p, a divisor of m");
  qenum->add_option("--n", qn, "matrix size n");
  qenum->add_option("--json", json_path, "write JSON to PATH");

  // order
  auto* order = app.add_subcommand("order", "coset enumeration over the trivial subgroup");
  PresentationArgs ord_p;
  ord_p.attach(order);
  std::int64_t max_cosets = 1'000'000;
  std::optional<long long> expect;
  order->add_option("--max-cosets", max_cosets, "coset budget");
  order->add_option("--expect", expect, "compare against this order");
  order->add_option("--json", json_path, "write JSON to PATH");

  // center
  auto* center = app.add_subcommand("center", "the central element theta_n");
  int cn = 2, cm = 2, power_k = 1;
  bool verify = false;
  BudgetArgs center_b;
  center_b.attach(center);
  center->add_option("--n", cn, "strands");
  center->add_option("--m", cm, "cone order m");
  center->add_option("--power", power_k, "exponent k for the membership test");
  center->add_flag("--verify", verify, "run the prover and quotient checks");
  center->add_option("--json", json_path, "write JSON to PATH");

  // suite
  auto* suite = app.add_subcommand("suite", "run a named verification suite");
  std::string suite_name;
  SuiteParams sp;
  BudgetArgs suite_b;
  suite_b.attach(suite);
  suite->add_option("name", suite_name, "suite name")->required();
  suite->add_option("--n", sp.n, "strands, 0 for the suite default");
  suite->add_option("--m", sp.m, "cone order m");
  suite->add_option("--mp", sp.mp, "second cone order m'");
  suite->add_option("--L", sp.L, "punctures");
  suite->add_option("--json", json_path, "write JSON to PATH");
  bool list_suites = false;
  auto* list = app.add_subcommand("list-suites", "print the suite names");
  list->callback([&] { list_suites = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (list_suites) {
      for (const auto& s : suite_names()) std::cout << s << "\n";
      return kPass;
    }

    if (*emit) {
      const Presentation p = emit_p.build();
      std::cout << format_presentation(p);
      if (!emit_out.empty()) write_presentation_file(emit_out, p);
      write_json(json_path, presentation_json(p).dump(2));
      return kPass;
    }

    if (*prove) {
      const Presentation p = prove_p.build();
      const Word a = parse_word(lhs_text), b = parse_word(rhs_text);
      if (!p.covers(a) || !p.covers(b)) throw Error("word uses generators outside the presentation");
      const ProofResult r = prove_equal(p, a, b, prove_b.budget);
      const bool replayed = r.proved() && verify_proof(p, {}, a, b, r);
      bool separated = false;
      if (!r.proved()) {
        try {
          separated = separate(WreathAssignment::standard_for(p), a, b);
        } catch (const Error&) {
        }
      }
      const std::string status = r.proved() ? (replayed ? "proved" : "mismatch") : (separated ? "mismatch" : "unknown");
      std::cout << status << "  nodes " << r.stats.nodes << "  chain " << r.chain.size() << "\n";
      if (r.proved()) std::cout << "meet " << r.meet.str() << "\n";
      if (separated) std::cout << "the sides differ in the wreath quotient\n";
      if (!chain_path.empty()) {
        std::ofstream os(chain_path);
        if (!os) throw Error("cannot write " + chain_path);
        for (const auto& s : r.chain) os << step_json(s).dump() << "\n";
      }
      json j{{"lhs", a.str()}, {"rhs", b.str()}, {"status", status}, {"nodes", r.stats.nodes},
             {"chain_len", r.chain.size()}, {"meet", r.meet.str()}};
      write_json(json_path, j.dump(2));
      if (status == "proved") return kPass;
      return status == "mismatch" ? kFail : kUnknown;
    }

    if (*vhom) {
      IsomorphismPair pair;
      if (!map_file.empty()) {
        if (map_source.empty() || map_target.empty()) throw Error("--map needs --source and --target");
        pair.phi = read_assignment(map_file, read_presentation_file(map_source), read_presentation_file(map_target));
        direction = "phi";
      } else if (pair_name == "two_cone") {
        pair = two_cone_pair(vh_n, vh_m, vh_mp);
      } else if (pair_name == "cone_puncture") {
        pair = cone_puncture_pair(vh_n, vh_m);
      } else if (pair_name == "one_cone") {
        pair = one_cone_pair(vh_n, vh_m);
      } else {
        throw Error("unknown pair '" + pair_name + "'");
      }
      if (direction != "phi" && direction != "psi") throw Error("direction must be phi or psi");
      const Assignment& a = direction == "phi" ? pair.phi : pair.psi;
      VerificationReport rep;
      rep.suite = "verify-hom " + (map_file.empty() ? pair_name + " " + direction : map_file);
      rep.params = {vh_n, vh_m, vh_mp, 0, vhom_b.budget};
      rep.convention = {"relator of lhs = rhs is lhs * rhs^-1"};
      GoalRunner run(a.target, vhom_b.budget, rep);
      for (const auto& r : a.source.relations) {
        run.prove(r.tag + " " + r.lhs.str() + " = " + r.rhs.str(), apply_assignment(a, r.lhs), apply_assignment(a, r.rhs));
      }
      std::cout << rep.to_text();
      write_json(json_path, rep.to_json());
      return rep.exit_code();
    }

    if (*nf) {
      const Presentation p = nf_p.build();
      const Word w = parse_word(nf_word);
      const auto f = semidirect_normal_form(p, w);
      const auto factors = torsion_factors(p);
      std::cout << f.normal_part.str() << " |";
      json exps = json::object();
      for (std::size_t i = 0; i < factors.size(); ++i) {
        std::cout << " " << factors[i].gen.label() << "^" << f.quotient_exponents[i];
        exps[factors[i].gen.label()] = f.quotient_exponents[i];
      }
      std::cout << "\n";
      write_json(json_path, json{{"word", w.str()}, {"normal_part", f.normal_part.str()}, {"exponents", exps}}.dump(2));
      return kPass;
    }

    if (*qeval) {
      const Presentation p = qe_p.build();
      const auto asgn = WreathAssignment::standard_for(p, track_punctures);
      const auto x = evaluate_word(asgn, parse_word(qe_word));
      std::cout << x.str() << "\n";
      write_json(json_path, json{{"word", qe_word}, {"image", x.str()}, {"identity", x.is_identity()},
                                 {"convention", kMonomialConvention}}.dump(2));
      return kPass;
    }

    if (*qcheck) {
      const Presentation p = qc_p.build();
      const auto rep = check_relations_in_quotient(p, WreathAssignment::standard_for(p));
      json entries = json::array();
      for (const auto& e : rep.entries) {
        if (!e.holds) std::cout << "FAIL " << e.tag << " " << e.lhs << " = " << e.rhs << "\n";
        entries.push_back({{"tag", e.tag}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"holds", e.holds}});
      }
      std::cout << rep.entries.size() << " relations, " << (rep.pass ? "all hold" : "some fail") << "\n";
      write_json(json_path, json{{"presentation", p.name}, {"entries", entries}, {"pass", rep.pass}}.dump(2));
      return rep.pass ? kPass : kFail;
    }

    if (*qenum) {
      const auto g = enumerate_G(qm, qp, qn);
      const long long formula = order_G(qm, qp, qn);
      std::cout << "G(" << qm << "," << qp << "," << qn << ") has " << g.count << " elements\n";
      write_json(json_path, json{{"m", qm}, {"p", qp}, {"n", qn}, {"count", g.count}, {"formula", formula}}.dump(2));
      return g.count == formula ? kPass : kFail;
    }

    if (*order) {
      const Presentation p = ord_p.build();
      const auto r = enumerate_order(p, max_cosets);
      json j{{"presentation", p.name}, {"cosets_defined", r.table.defined}};
      int code = kPass;
      if (r.status == EnumStatus::Overflow) {
        std::cout << "overflow after " << r.table.defined << " cosets\n";
        j["status"] = "overflow";
        code = kOverflow;
      } else {
        std::cout << "order " << r.order << "\n";
        j["status"] = "complete";
        j["order"] = r.order;
        if (expect && *expect != r.order) code = kFail;
      }
      if (expect) j["expected"] = *expect;
      write_json(json_path, j.dump(2));
      return code;
    }

    if (*center) {
      if (verify) {
        SuiteParams csp{cn, cm, 2, 0, center_b.budget};
        const auto rep = run_suite("center", csp);
        std::cout << rep.to_text();
        write_json(json_path, rep.to_json());
        return rep.exit_code();
      }
      const Word th = theta(cn, cm);
      const auto mem = theta_power_membership(cn, cm, power_k);
      std::cout << "theta_" << cn << " = " << th.str() << "\n"
                << "u-exponent " << u_exponent(th, cm) << "\n"
                << "l " << mem.l << "\n"
                << "theta^" << power_k << (mem.member ? " lies" : " does not lie") << " in the normal subgroup\n";
      write_json(json_path, json{{"n", cn}, {"m", cm}, {"theta", th.str()}, {"u_exponent", u_exponent(th, cm)},
                                 {"l", mem.l}, {"power", power_k}, {"member", mem.member},
                                 {"normal_form_exponent", mem.normal_form_exponent}}.dump(2));
      return kPass;
    }

    if (*suite) {
      sp.budget = suite_b.budget;
      const auto rep = run_suite(suite_name, sp);
      std::cout << rep.to_text();
      write_json(json_path, rep.to_json());
      return rep.exit_code();
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
