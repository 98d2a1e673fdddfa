// Named verification suites. Each suite instantiates a family of
// obligations, discharges them with the prover, the wreath quotient or the
// coset enumerator, and collects one report entry per obligation.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orbi/presentations.hpp"
#include "orbi/prover.hpp"

namespace orbi {

inline constexpr const char* kToolVersion = "0.1.0";

struct SuiteParams {
  int n = 0;  // 0 selects the suite's default strand count
  int m = 2;
  int mp = 2;
  int L = 0;
  ProverBudget budget;
};

// Entry statuses. "proved" and "equal" count as passing; "unknown" means the
// prover ran out of budget; "mismatch" is a disproof or a failed exact check;
// "overflow" is an exhausted enumeration.
struct ReportEntry {
  std::string tag;
  std::string status;
  std::int64_t nodes = 0;
  std::size_t chain_len = 0;
  std::string detail;

  bool passed() const { return status == "proved" || status == "equal"; }
};

struct VerificationReport {
  std::string suite;
  SuiteParams params;
  std::vector<std::string> convention;
  std::vector<ReportEntry> entries;
  bool pass = true;

  void add(ReportEntry e);
  // 0 pass; otherwise 1 if any mismatch, else 3 if any overflow, else 2.
  int exit_code() const;
  std::string to_json() const;
  std::string to_text() const;
};

std::vector<std::string> suite_names();
// Throws Error for an unknown suite name or unsupported parameters.
VerificationReport run_suite(const std::string& name, const SuiteParams& params);

// Proves goals in one presentation and keeps the proved ones as named
// lemmas that later goals may list in `uses`.
class GoalRunner {
 public:
  GoalRunner(Presentation p, ProverBudget budget, VerificationReport& report);

  // Records one entry under `tag`. With `lemma_name` set, a proved result is
  // stored for later goals. Returns true when proved and replayed.
  bool prove(const std::string& tag, const Word& lhs, const Word& rhs,
             const std::vector<std::string>& uses = {}, const std::string& lemma_name = "");
  bool has_lemma(const std::string& name) const { return book_.count(name) > 0; }
  std::vector<Lemma> select(const std::vector<std::string>& uses) const;
  const Presentation& presentation() const { return p_; }

 private:
  Presentation p_;
  ProverBudget budget_;
  VerificationReport& report_;
  std::map<std::string, Lemma> book_;
};

}  // namespace orbi
