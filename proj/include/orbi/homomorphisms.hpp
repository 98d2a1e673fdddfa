// Generator assignments between presentations: letterwise application,
// von Dyck obligations, the isomorphism pairs between the standard and the
// rewritten presentations, conjugation automorphisms and the semidirect
// normal form.
#pragma once

#include <map>
#include <vector>

#include "orbi/presentations.hpp"
#include "orbi/prover.hpp"
#include "orbi/words.hpp"

namespace orbi {

struct Assignment {
  Presentation source;
  Presentation target;
  std::map<GeneratorId, Word> images;

  // Throws unless every source generator has an image over the target alphabet.
  void validate() const;
};

Word apply_assignment(const Assignment& a, const Word& w);
// One obligation per source relation, carrying the relation's tag.
std::vector<Obligation> von_dyck_obligations(const Assignment& a);
// g -> b(a(g)). Requires a.target and b.source to have the same generators.
Assignment compose(const Assignment& a, const Assignment& b);
Assignment identity_assignment(const Presentation& p);

// phi maps the standard presentation A to the rewritten presentation B and
// psi maps back.
struct IsomorphismPair {
  Assignment phi;
  Assignment psi;
};

// A = orbifold braid presentation with two cone points, B = two-cone semidirect form.
IsomorphismPair two_cone_pair(int n, int m, int mprime);
// A = one cone point and one puncture, B = its semidirect form.
IsomorphismPair cone_puncture_pair(int n, int m);
// A = one cone point, B = its semidirect form (also valid for n = 2).
IsomorphismPair one_cone_pair(int n, int m);

// Normal generators are the non-torsion generators.
Presentation normal_subgroup(const Presentation& p);

// Reads y x y^-1 = w off the conjugation relations of p and returns the
// endomap x -> w of the normal subgroup. Throws when some normal generator
// has no such relation.
Assignment conjugation_automorphism(const Presentation& p, const GeneratorId& y);
// The k-fold iterate of an endomap.
Assignment iterate(const Assignment& a, int k);

// u^k base u^-k in closed form:
//   <conj^-1, base^-1>_{k-1} <conj, base>_k   for odd k
//   <conj^-1, base^-1>_{k-1} <base, conj>_k   for even k
Word closed_form_conjugation(int k, const GeneratorId& base = GeneratorId::h(1),
                             const GeneratorId& conj = GeneratorId::hu(1));

// Torsion generator y with its order, read from a relation y^k = 1.
struct TorsionFactor {
  GeneratorId gen;
  int order = 0;
};
std::vector<TorsionFactor> torsion_factors(const Presentation& p);

struct SemidirectForm {
  Word normal_part;
  // One exponent per torsion factor, in generator order (u before u').
  std::vector<int> quotient_exponents;

  // normal_part followed by the torsion powers.
  Word word(const std::vector<TorsionFactor>& factors) const;
};

SemidirectForm semidirect_normal_form(const Presentation& p, const Word& w);

// Signed number of u letters modulo m.
int u_exponent(const Word& w, int m);

}  // namespace orbi
