#include "orbi/suites.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"

#include "orbi/center.hpp"
#include "orbi/coset_enum.hpp"
#include "orbi/homomorphisms.hpp"
#include "orbi/quotients.hpp"

namespace orbi {

namespace {

Word gen(const GeneratorId& g) { return Word::of(g); }
Word conj(const Word& x, const Word& y) { return concat({x, y, invert(x)}); }
std::string nu_tag(const std::string& base, int nu) { return base + "(nu=" + std::to_string(nu) + ")"; }
std::string relation_text(const Relation& r) { return r.tag + " " + r.lhs.str() + " = " + r.rhs.str(); }

std::set<GeneratorId> generators_of(const Relation& r) {
  std::set<GeneratorId> s;
  for (const auto& l : r.lhs) s.insert(l.gen);
  for (const auto& l : r.rhs) s.insert(l.gen);
  return s;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

ReportEntry exact(const std::string& tag, bool ok, std::string detail = "") {
  return {tag, ok ? "equal" : "mismatch", 0, 0, std::move(detail)};
}

// ---------------------------------------------------------------------------
// Relations about the conjugated cone loops c(3,nu) in the three-strand
// orbifold braid group. They serve as rows of their own suite and as lemmas
// for the harder rows of the psi tables.

struct ConeData {
  int nu;
  int order;
  Word c;  // c(3,nu)
};

std::vector<ConeData> cones_of(const std::vector<int>& orders) {
  std::vector<ConeData> out;
  for (std::size_t k = 0; k < orders.size(); ++k) {
    const int nu = static_cast<int>(k) + 1;
    out.push_back({nu, orders[k], expand_pure_generator(GeneratorId::c(3, nu))});
  }
  return out;
}

void cone_lemmas(GoalRunner& run, const ConeData& c) {
  const Word h1 = gen(GeneratorId::h(1)), h2 = gen(GeneratorId::h(2));
  run.prove(nu_tag("S1", c.nu), power(c.c, c.order), Word(), {}, nu_tag("S1", c.nu));
  run.prove(nu_tag("C1", c.nu), h1 * c.c, c.c * h1, {}, nu_tag("C1", c.nu));
  run.prove(nu_tag("C2", c.nu), concat({h2, c.c, h2, c.c}), concat({c.c, h2, c.c, h2}), {}, nu_tag("C2", c.nu));
}

std::vector<std::string> cone_uses(int nu) { return {nu_tag("S1", nu), nu_tag("C2", nu), nu_tag("C1", nu)}; }

void suite_lemma31(VerificationReport& rep, const SuiteParams& sp) {
  require(sp.n == 3, "lemma31: supported at n = 3 only");
  const Word h1 = gen(GeneratorId::h(1)), h2 = gen(GeneratorId::h(2)), u = gen(GeneratorId::u());
  GoalRunner run(build_orbifold_braid(3, 0, {sp.m, sp.mp}), sp.budget, rep);
  const auto cones = cones_of({sp.m, sp.mp});
  for (const auto& c : cones) cone_lemmas(run, c);
  run.prove("S2", u * cones[1].c, cones[1].c * u, {}, "S2");

  const Word h1u = conj(u, h1);
  run.prove("R1", alternating_word(h1, h1u, sp.m), alternating_word(h1u, h1, sp.m));
  for (const auto& c : cones) {
    const Word h2c = conj(c.c, h2);
    run.prove(nu_tag("R2", c.nu), alternating_word(h2, h2c, c.order), alternating_word(h2c, h2, c.order),
              cone_uses(c.nu));
  }
  run.prove("R3", power(concat({h1, h1u, h2}), 2), power(concat({h2, h1, h1u}), 2));
  for (const auto& c : cones) {
    const Word h2c = conj(c.c, h2);
    run.prove(nu_tag("R4", c.nu), power(concat({h2, h2c, h1}), 2), power(concat({h1, h2, h2c}), 2));
  }

  GoalRunner punct(build_orbifold_braid(3, 1, {sp.m}), sp.budget, rep);
  const Word t = gen(GeneratorId::t()), c31 = expand_pure_generator(GeneratorId::c(3, 1));
  punct.prove("C3", t * c31, c31 * t);
}

// ---------------------------------------------------------------------------
// Tables of von Dyck obligations.

using HintFn = std::function<std::vector<std::string>(const Relation&)>;

void run_obligations(GoalRunner& run, const Assignment& a, const HintFn& hints) {
  for (const auto& r : a.source.relations) {
    run.prove(relation_text(r), apply_assignment(a, r.lhs), apply_assignment(a, r.rhs), hints ? hints(r) : std::vector<std::string>{});
  }
}

void suite_table1(VerificationReport& rep, const SuiteParams& sp) {
  require(sp.n == 3, "table1: supported at n = 3 only");
  const auto pair = two_cone_pair(3, sp.m, sp.mp);
  GoalRunner run(pair.psi.target, sp.budget, rep);
  const auto cones = cones_of({sp.m, sp.mp});
  const ConeData& c2 = cones[1];
  cone_lemmas(run, c2);
  const Word h1 = gen(GeneratorId::h(1)), h2 = gen(GeneratorId::h(2)), u = gen(GeneratorId::u());
  run.prove("S2", u * c2.c, c2.c * u, {}, "S2");
  // At three strands h1^u and h2^u' braid. Conjugating by c(3,2), which
  // commutes with u and h1, reduces that row to the braid of h1^u with h2.
  const Word h1u = conj(u, h1);
  run.prove("aux c32 h1^u", c2.c * h1u, h1u * c2.c, {"S2", "C1(nu=2)"}, "aux-commute");
  run.prove("aux h1^u h2 braid", concat({h1u, h2, h1u}), concat({h2, h1u, h2}), {}, "aux-braid");

  const std::set<GeneratorId> cross{GeneratorId::hu(1), GeneratorId::huprime(2)};
  const std::set<GeneratorId> second{GeneratorId::h(2), GeneratorId::huprime(2)};
  run_obligations(run, pair.psi, [&](const Relation& r) -> std::vector<std::string> {
    const auto g = generators_of(r);
    if (g == cross) return {"S2", "C1(nu=2)", "aux-commute", "aux-braid"};
    if (g == second && r.tag == "R2") return cone_uses(2);
    return {};
  });
}

void suite_table2(VerificationReport& rep, const SuiteParams& sp) {
  require(sp.n >= 3, "table2: needs n >= 3");
  const auto pair = two_cone_pair(sp.n, sp.m, sp.mp);
  GoalRunner run(pair.phi.target, sp.budget, rep);
  run_obligations(run, pair.phi, nullptr);
}

void suite_table4(VerificationReport& rep, const SuiteParams& sp) {
  require(sp.n == 3, "table4: supported at n = 3 only");
  const auto pair = cone_puncture_pair(3, sp.m);
  GoalRunner run(pair.psi.target, sp.budget, rep);
  const auto cones = cones_of({sp.m});
  cone_lemmas(run, cones[0]);
  const std::set<GeneratorId> last{GeneratorId::h(2), GeneratorId::hu(2)};
  run_obligations(run, pair.psi, [&](const Relation& r) -> std::vector<std::string> {
    if (generators_of(r) == last && r.tag == "R3") return cone_uses(1);
    return {};
  });
}

void suite_table5(VerificationReport& rep, const SuiteParams& sp) {
  require(sp.n >= 3, "table5: needs n >= 3");
  const auto pair = cone_puncture_pair(sp.n, sp.m);
  GoalRunner run(pair.phi.target, sp.budget, rep);
  run_obligations(run, pair.phi, nullptr);
}

// ---------------------------------------------------------------------------
// Semidirect product steps.

// At three strands with a cone order above 2 the two-cone presentation needs
// the replacement relations; otherwise the general one applies.
Presentation two_cone_step_presentation(int n, int m, int mp) {
  if (n == 3 && std::max(m, mp) > 2) return build_remark34_presentation(m, mp);
  return build_prop32_presentation(n, m, mp);
}

// Images of the relations of the normal subgroup under an endomap, skipping
// relations that the map fixes letter for letter.
void endomap_images(GoalRunner& run, const Assignment& phi, const std::string& label) {
  for (const auto& r : phi.source.relations) {
    const Word l = apply_assignment(phi, r.lhs), rr = apply_assignment(phi, r.rhs);
    if (l == r.lhs && rr == r.rhs) continue;
    run.prove(label + ": " + relation_text(r), l, rr);
  }
}

void finite_order_step(GoalRunner& run, const Assignment& phi, int order, const std::string& label) {
  const Assignment it = iterate(phi, order);
  for (const auto& g : phi.source.generators) {
    run.prove(label + "^" + std::to_string(order) + "(" + g.label() + ") = " + g.label(), apply_assignment(it, gen(g)), gen(g));
  }
}

void suite_table3(VerificationReport& rep, const SuiteParams& sp) {
  require(sp.n >= 3, "table3: needs n >= 3");
  const Presentation p = two_cone_step_presentation(sp.n, sp.m, sp.mp);
  const auto fu = conjugation_automorphism(p, GeneratorId::u());
  const auto fup = conjugation_automorphism(p, GeneratorId::uprime());
  GoalRunner run(fu.source, sp.budget, rep);
  endomap_images(run, fu, "phi_u");
  endomap_images(run, fup, "phi_u'");
}

void suite_table6(VerificationReport& rep, const SuiteParams& sp) {
  require(sp.n >= 3, "table6: needs n >= 3");
  const auto fb = conjugation_automorphism(build_prop36_presentation(sp.n, sp.m), GeneratorId::ubar());
  GoalRunner run(fb.source, sp.budget, rep);
  endomap_images(run, fb, "phi_ubar");
}

void suite_thm33(VerificationReport& rep, const SuiteParams& sp) {
  require(sp.n >= 3, "thm33_steps: needs n >= 3");
  const Presentation p = two_cone_step_presentation(sp.n, sp.m, sp.mp);
  const auto fu = conjugation_automorphism(p, GeneratorId::u());
  const auto fup = conjugation_automorphism(p, GeneratorId::uprime());
  GoalRunner run(fu.source, sp.budget, rep);
  finite_order_step(run, fu, sp.m, "step1 phi_u");
  finite_order_step(run, fup, sp.mp, "step1 phi_u'");
  const auto a = compose(fu, fup), b = compose(fup, fu);
  for (const auto& g : fu.source.generators) {
    const Word x = a.images.at(g), y = b.images.at(g);
    rep.add(exact("step1 phi_u phi_u'(" + g.label() + ") = phi_u' phi_u(" + g.label() + ")", x == y, x.str() + " | " + y.str()));
  }
  const GeneratorId h1 = GeneratorId::h(1);
  for (int k = 1; k <= 2 * sp.m; ++k) {
    run.prove("closed-form k=" + std::to_string(k), closed_form_conjugation(k),
              apply_assignment(iterate(fu, k), gen(h1)));
  }
  endomap_images(run, fu, "step2 phi_u");
  endomap_images(run, fup, "step2 phi_u'");
}

void suite_thm37(VerificationReport& rep, const SuiteParams& sp) {
  require(sp.n >= 3, "thm37_steps: needs n >= 3");
  const auto fb = conjugation_automorphism(build_prop36_presentation(sp.n, sp.m), GeneratorId::ubar());
  GoalRunner run(fb.source, sp.budget, rep);
  finite_order_step(run, fb, sp.m, "step1 phi_ubar");
  endomap_images(run, fb, "step2 phi_ubar");
}

// ---------------------------------------------------------------------------

void inverse_checks(VerificationReport& rep, const SuiteParams& sp, const IsomorphismPair& pair, const std::string& label) {
  const auto back = compose(pair.phi, pair.psi);  // psi after phi, on A
  for (const auto& g : pair.phi.source.generators) {
    const Word w = back.images.at(g);
    rep.add(exact(label + " psi(phi(" + g.label() + "))", w == gen(g), w.str()));
  }
  const auto fwd = compose(pair.psi, pair.phi);  // phi after psi, on B
  GoalRunner run(pair.phi.target, sp.budget, rep);
  for (const auto& g : pair.psi.source.generators) {
    run.prove(label + " phi(psi(" + g.label() + "))", fwd.images.at(g), gen(g));
  }
}

void suite_inverses(VerificationReport& rep, const SuiteParams& sp) {
  require(sp.n >= 3, "inverses: needs n >= 3");
  inverse_checks(rep, sp, two_cone_pair(sp.n, sp.m, sp.mp), "two-cone");
  inverse_checks(rep, sp, cone_puncture_pair(sp.n, sp.m), "cone-puncture");
  inverse_checks(rep, sp, one_cone_pair(sp.n, sp.m), "one-cone");
}

// ---------------------------------------------------------------------------

void suite_center(VerificationReport& rep, const SuiteParams& sp) {
  require(sp.n >= 2 && sp.m >= 2, "center: needs n >= 2 and m >= 2");
  const int n = sp.n, m = sp.m;
  for (int j = 1; j <= 8; ++j) {
    const Word e = expand_pure_word(gamma_pure(j));
    rep.add(exact("gamma_pure(" + std::to_string(j) + ") expands to gamma_" + std::to_string(j), e == gamma(j, 8, m), e.str()));
  }

  GoalRunner run(build_orbifold_braid(n, 0, {m}), sp.budget, rep);
  const Word th = theta(n, m);
  for (const auto& g : run.presentation().generators) {
    run.prove("central " + g.label(), gen(g) * th, th * gen(g));
  }

  int checked = 0, bad = 0;
  std::string first_bad;
  for (int a = 2; a <= 6; ++a) {
    for (int b = 2; b <= 6; ++b) {
      const Presentation p = build_orbifold_braid(a, 0, {b});
      const auto asgn = WreathAssignment::standard_for(p);
      const auto t = evaluate_word(asgn, theta(a, b));
      for (const auto& g : p.generators) {
        const auto x = evaluate_generator(asgn, g);
        ++checked;
        if (!(monomial_mul(x, t) == monomial_mul(t, x))) {
          if (bad++ == 0) first_bad = "n=" + std::to_string(a) + " m=" + std::to_string(b) + " " + g.label();
        }
      }
    }
  }
  rep.add(exact("wreath-central grid n,m <= 6", bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + (bad ? " first failure " + first_bad : "")));

  checked = bad = 0;
  for (int a = 1; a <= 6; ++a) {
    for (int b = 2; b <= 6; ++b) {
      for (int k = 0; k <= 6; ++k) {
        ++checked;
        if (u_exponent(power(theta(a, b), k), b) != (k * a) % b) ++bad;
      }
    }
  }
  rep.add(exact("u-exponent of theta^k grid n,m,k <= 6", bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked)));

  checked = bad = 0;
  for (int a = 1; a <= 8; ++a) {
    ++checked;
    const Word tp = theta_pure(a);
    if (pure_degree(tp) != a - 1 || expand_pure_word(tp) != theta(a, m)) ++bad;
  }
  rep.add(exact("pure degree of theta_n is n-1 for n <= 8", bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked)));

  checked = bad = 0;
  for (int a = 2; a <= 6; ++a) {
    for (int b = 2; b <= 6; ++b) {
      for (int k = 0; k <= 6; ++k) {
        ++checked;
        const auto r = theta_power_membership(a, b, k);
        if (r.member != (r.normal_form_exponent == 0) || r.quotient_exponent != r.normal_form_exponent) ++bad;
      }
    }
  }
  rep.add(exact("membership matches normal form grid n,m,k <= 6", bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked)));

  const int ue = u_exponent(th, m);
  rep.add(exact("u-exponent of theta_n", ue == n % m, std::to_string(ue)));
  const int l = theta_order_modulus(n, m);
  const auto mem = theta_power_membership(n, m, l);
  rep.add(exact("theta_n^l lies in the normal subgroup", mem.member && mem.normal_form_exponent == 0, "l=" + std::to_string(l)));

  // theta_n splits as N u^n with N the normal-subgroup word; together with
  // centrality this gives theta_n^l = N^l u^{ln} = N^l.
  GoalRunner normal(build_cor35_presentation(n, m), sp.budget, rep);
  const Word u = gen(GeneratorId::u());
  normal.prove("theta_n = N u^n", th, theta_normal_word(n, 1) * power(u, n), {}, "split");
  normal.prove("u theta_n = theta_n u", u * th, th * u, {}, "central-u");
  normal.prove("theta_n^l equals the normal-subgroup word", power(th, l), theta_normal_word(n, l), {"split", "central-u"});
}

// ---------------------------------------------------------------------------

struct OrderCase {
  std::string tag;
  Presentation p;
  int gm, gp, gn;  // oracle G(gm, gp, gn)
};

std::vector<OrderCase> order_cases() {
  const auto reflections = [](const GeneratorId& g) {
    return g.family == Family::H || g.family == Family::HUConj;
  };
  const auto strands = [](const GeneratorId& g) { return g.family == Family::H; };
  const auto reflection_part = [&](int n, int m) {
    return coxeterize(restrict_to(build_cor35_presentation(n, m), reflections), reflections);
  };
  std::vector<OrderCase> out;
  out.push_back({"S_3", coxeterize(artin_from_graph(path_graph(2))), 1, 1, 3});
  out.push_back({"W(D_3)", reflection_part(3, 2), 2, 2, 3});
  out.push_back({"G(3,3,3)", reflection_part(3, 3), 3, 3, 3});
  out.push_back({"G(4,4,3)", reflection_part(3, 4), 4, 4, 3});
  out.push_back({"G(2,2,4)", reflection_part(4, 2), 2, 2, 4});
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    out.push_back({"Z_" + std::to_string(m) + " wr S_" + std::to_string(n),
                   coxeterize(build_orbifold_braid(n, 0, {m}), strands), m, 1, n});
  }
  return out;
}

void suite_orders(VerificationReport& rep, const SuiteParams&) {
  for (const auto& c : order_cases()) {
    const auto oracle = enumerate_G(c.gm, c.gp, c.gn).count;
    const auto r = enumerate_order(c.p);
    ReportEntry e{c.tag, "", r.table.defined, 0, ""};
    if (r.status == EnumStatus::Overflow) {
      e.status = "overflow";
      e.detail = "oracle " + std::to_string(oracle);
    } else {
      e.status = r.order == oracle ? "equal" : "mismatch";
      e.detail = "order " + std::to_string(r.order) + " oracle " + std::to_string(oracle);
    }
    rep.add(e);
  }
}

// Every relation of every builder maps to the identity of the wreath quotient.
void suite_quotients(VerificationReport& rep, const SuiteParams&) {
  struct Family_ {
    std::string name;
    std::vector<Presentation> members;
  };
  std::vector<Family_> fams(6);
  fams[0].name = "orbifold_braid";
  fams[1].name = "pure_orbifold";
  fams[2].name = "two_cone_semidirect";
  fams[3].name = "cone_puncture_semidirect";
  fams[4].name = "one_cone_semidirect";
  fams[5].name = "three_strand_replacement";
  for (int n = 1; n <= 5; ++n) {
    for (int L = 0; L <= 1; ++L) {
      for (int m = 2; m <= 6; ++m) {
        fams[0].members.push_back(build_orbifold_braid(n, L, {m}));
        fams[1].members.push_back(build_pure_orbifold(n, L, {m}));
        for (int mp = 2; mp <= 6; ++mp) {
          fams[0].members.push_back(build_orbifold_braid(n, L, {m, mp}));
          fams[1].members.push_back(build_pure_orbifold(n, L, {m, mp}));
        }
      }
    }
  }
  for (int n = 2; n <= 5; ++n) {
    for (int m = 2; m <= 6; ++m) {
      if (n >= 3) {
        for (int mp = 2; mp <= 6; ++mp) fams[2].members.push_back(build_prop32_presentation(n, m, mp));
        fams[3].members.push_back(build_prop36_presentation(n, m));
      }
      fams[4].members.push_back(build_cor35_presentation(n, m));
    }
  }
  for (int m = 2; m <= 6; ++m) {
    for (int mp = 2; mp <= 6; ++mp) fams[5].members.push_back(build_remark34_presentation(m, mp));
  }
  for (const auto& f : fams) {
    std::size_t rels = 0, bad = 0;
    std::string first;
    for (const auto& p : f.members) {
      const auto q = check_relations_in_quotient(p, WreathAssignment::standard_for(p));
      for (const auto& e : q.entries) {
        ++rels;
        if (!e.holds && bad++ == 0) first = p.name + ": " + e.tag + " " + e.lhs + " = " + e.rhs;
      }
    }
    rep.add(exact(f.name, bad == 0,
                  std::to_string(f.members.size()) + " presentations, " + std::to_string(rels - bad) + "/" +
                      std::to_string(rels) + " relations" + (bad ? "; first failure " + first : "")));
  }
}

int default_n(const std::string& name) {
  if (name == "center") return 2;
  return 3;
}

}  // namespace

// ---------------------------------------------------------------------------

void VerificationReport::add(ReportEntry e) {
  if (!e.passed()) pass = false;
  entries.push_back(std::move(e));
}

int VerificationReport::exit_code() const {
  if (pass) return 0;
  bool overflow = false;
  for (const auto& e : entries) {
    if (e.status == "mismatch") return 1;
    if (e.status == "overflow") overflow = true;
  }
  return overflow ? 3 : 2;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["params"] = {{"n", params.n},
                 {"m", params.m},
                 {"m'", params.mp},
                 {"L", params.L},
                 {"max_nodes", params.budget.max_nodes},
                 {"slack", params.budget.slack},
                 {"version", kToolVersion}};
  j["convention"] = convention;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json o;
    o["tag"] = e.tag;
    o["status"] = e.status;
    o["nodes"] = e.nodes;
    o["chain_len"] = e.chain_len;
    if (!e.detail.empty()) o["detail"] = e.detail;
    arr.push_back(std::move(o));
  }
  j["entries"] = std::move(arr);
  j["pass"] = pass;
  return j.dump(2);
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << " (n=" << params.n << " m=" << params.m << " m'=" << params.mp << " L=" << params.L << ")\n";
  for (const auto& e : entries) {
    os << "  " << (e.passed() ? "ok   " : "FAIL ") << e.status << "  " << e.tag;
    if (e.nodes) os << "  [nodes " << e.nodes << ", chain " << e.chain_len << "]";
    if (!e.detail.empty()) os << "  " << e.detail;
    os << "\n";
  }
  os << (pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::vector<std::string> suite_names() {
  return {"lemma31", "table1", "table2",      "table3",      "table4", "table5",  "table6",
          "thm33_steps", "thm37_steps", "inverses", "center", "orders", "quotients"};
}

VerificationReport run_suite(const std::string& name, const SuiteParams& params) {
  static const std::map<std::string, void (*)(VerificationReport&, const SuiteParams&)> table{
      {"lemma31", suite_lemma31},   {"table1", suite_table1},     {"table2", suite_table2},
      {"table3", suite_table3},     {"table4", suite_table4},     {"table5", suite_table5},
      {"table6", suite_table6},     {"thm33_steps", suite_thm33}, {"thm37_steps", suite_thm37},
      {"inverses", suite_inverses}, {"center", suite_center},     {"orders", suite_orders},
      {"quotients", suite_quotients}};
  auto it = table.find(name);
  if (it == table.end()) throw Error("unknown suite '" + name + "'");
  if (params.m < 2 || params.mp < 2) throw Error("cone orders must be at least 2");
  VerificationReport rep;
  rep.suite = name;
  rep.params = params;
  if (rep.params.n == 0) rep.params.n = default_n(name);
  rep.convention = {kMonomialConvention, "relator of lhs = rhs is lhs * rhs^-1",
                    "chains are two-sided: side 0 rewrites lhs, side 1 rewrites rhs"};
  it->second(rep, rep.params);
  return rep;
}

// ---------------------------------------------------------------------------

GoalRunner::GoalRunner(Presentation p, ProverBudget budget, VerificationReport& report)
    : p_(std::move(p)), budget_(budget), report_(report) {}

std::vector<Lemma> GoalRunner::select(const std::vector<std::string>& uses) const {
  std::vector<Lemma> out;
  for (const auto& name : uses) {
    auto it = book_.find(name);
    if (it == book_.end()) throw Error("no proved lemma named '" + name + "'");
    out.push_back(it->second);
  }
  return out;
}

bool GoalRunner::prove(const std::string& tag, const Word& lhs, const Word& rhs, const std::vector<std::string>& uses,
                       const std::string& lemma_name) {
  std::vector<Lemma> lemmas;
  std::string missing;
  for (const auto& name : uses) {
    auto it = book_.find(name);
    if (it == book_.end()) {
      missing += (missing.empty() ? "" : ", ") + name;
    } else {
      lemmas.push_back(it->second);
    }
  }
  const ProofResult r = prove_equal(p_, lhs, rhs, budget_, lemmas);
  ReportEntry e{tag, "unknown", r.stats.nodes, r.chain.size(), ""};
  if (!uses.empty()) {
    e.detail = "uses";
    for (const auto& u : uses) e.detail += " " + u;
  }
  if (!missing.empty()) e.detail += (e.detail.empty() ? "" : "; ") + std::string("unproved lemmas: ") + missing;
  bool ok = false;
  if (r.proved()) {
    if (verify_proof(p_, lemmas, lhs, rhs, r)) {
      e.status = "proved";
      ok = true;
    } else {
      e.status = "mismatch";
      e.detail += (e.detail.empty() ? "" : "; ") + std::string("chain replay failed");
    }
  } else {
    try {
      if (separate(WreathAssignment::standard_for(p_), lhs, rhs)) {
        e.status = "mismatch";
        e.detail += (e.detail.empty() ? "" : "; ") + std::string("sides differ in the wreath quotient");
      }
    } catch (const Error&) {
      // No wreath images for this alphabet; the entry stays unknown.
    }
  }
  report_.add(e);
  if (ok && !lemma_name.empty()) book_[lemma_name] = Lemma{lhs, rhs, lemma_name, r, lemmas};
  return ok;
}

}  // namespace orbi
