// Bounded equality search for words modulo the relations of a presentation.
//
// A rewrite step replaces a subword x by y where x * y^-1 is a cyclic
// conjugate of a relator r = lhs * rhs^-1 or of r^-1, then freely reduces.
// This contains the plain moves lhs -> rhs, rhs -> lhs and their inverted
// forms as special cases. Relations of the form [a,b] = 1 between two
// generators are handled separately: search nodes are words normalized
// modulo those commutations, and every swap they perform is recorded as an
// ordinary step, so chains stay replayable against the relation list.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orbi/presentations.hpp"
#include "orbi/words.hpp"

namespace orbi {

struct ProverBudget {
  std::int64_t max_nodes = 1'000'000;
  int slack = 8;
  // 0 means max(|a|, |b|) + slack.
  int max_word_length = 0;
  bool deterministic_order = true;

  // Defaults overridable through ORBI_MAX_NODES and ORBI_SLACK.
  static ProverBudget from_env();
  int length_bound(const Word& a, const Word& b) const;
};

enum class ProofStatus { Proved, Unknown };

// One rewrite. `side` says which operand the step acts on: chains are
// two-sided, the lhs side rewrites a and the rhs side rewrites b, and both
// must end in the same meeting word.
struct ProofStep {
  int side = 0;
  int position = 0;
  int source = 0;  // relation index, or lemma index when `lemma` is set
  bool lemma = false;
  bool inverse = false;
  int rotation = 0;
  int split = 0;
  std::string tag;

  // Compact description of which cyclic piece was used, e.g. "r2s3" or "~r0s2".
  std::string direction() const;
  bool operator==(const ProofStep&) const = default;
};

struct ProofStats {
  std::int64_t nodes = 0;
  std::int64_t expanded = 0;
  int max_length = 0;
};

struct ProofResult {
  ProofStatus status = ProofStatus::Unknown;
  std::vector<ProofStep> chain;
  Word meet;
  ProofStats stats;

  bool proved() const { return status == ProofStatus::Proved; }
};

// A proved equation that later searches may use as an extra rule. `deps` are
// the lemmas its own proof was allowed to use; step sources of `proof` index
// into `deps`.
struct Lemma {
  Word lhs;
  Word rhs;
  std::string tag;
  ProofResult proof;
  std::vector<Lemma> deps;
};

// The cyclically reduced relator lhs * rhs^-1.
Word relator_of(const Word& lhs, const Word& rhs);
// Splits the rotated relator (or its inverse) into the rewrite x -> y.
std::pair<Word, Word> relator_piece(const Word& relator, bool inverse, int rotation, int split);

ProofResult prove_equal(const Presentation& p, const Word& a, const Word& b,
                        const ProverBudget& budget = {}, std::span<const Lemma> lemmas = {});

// Applies one step to a word, throwing if the step does not match.
Word apply_step(const Presentation& p, std::span<const Lemma> lemmas, const Word& w, const ProofStep& s);
// Re-executes the steps of one side starting from `start`.
Word replay(const Presentation& p, std::span<const Lemma> lemmas, const Word& start,
            std::span<const ProofStep> chain, int side);
// Checks a Proved result from scratch, including the proofs of the lemmas.
bool verify_proof(const Presentation& p, std::span<const Lemma> lemmas, const Word& a, const Word& b,
                  const ProofResult& r);
// Recursively re-checks every lemma against its own dependencies.
bool verify_lemmas(const Presentation& p, std::span<const Lemma> lemmas);

// Swaps the two sides, giving a chain for b = a.
ProofResult reversed(const ProofResult& r);

struct Obligation {
  Word lhs;
  Word rhs;
  std::string tag;
};

struct ObligationOutcome {
  Obligation obligation;
  ProofResult result;
};

struct ObligationReport {
  std::vector<ObligationOutcome> entries;
  bool pass = true;
};

ObligationReport verify_obligations(const Presentation& p, const std::vector<Obligation>& obligations,
                                    const ProverBudget& budget = {}, std::span<const Lemma> lemmas = {});

}  // namespace orbi
