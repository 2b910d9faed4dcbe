#pragma once

#include <functional>
#include <string>
#include <vector>

namespace genuscount {

enum class CheckStatus { ExactMatch, ConjectureConfirmed, Mismatch, Unavailable };

std::string check_status_name(CheckStatus s);

struct CheckRecord {
  std::string group;     // golden | pairings-table | twopart-table | gf | fit | qpoly |
                         // conjecture | structural | audit
  std::string subject;
  std::string method_a;
  std::string method_b;
  std::string range;
  CheckStatus status = CheckStatus::ExactMatch;
  std::string first_divergence;  // set on mismatch

  std::string to_text() const;
};

struct VerificationReport {
  std::vector<CheckRecord> records;

  bool ok() const;  // no Mismatch records
  std::string to_text() const;
  std::string to_json() const;
};

// Verification scopes bound the brute-force range: fast n<=10, standard
// n<=12, extended n<=13, full n<=15 (long-running).
enum class Scope { Fast, Standard, Extended, Full };

int scope_n_max(Scope scope);
Scope scope_from_name(const std::string& name);
std::string scope_name(Scope scope);

// Runs golden-table comparisons, oracle-vs-formula comparisons, sum rules and
// series-vs-count equalities within the scope.  The progress callback (may be
// empty) receives each record as it completes.
VerificationReport run_verification(Scope scope, int threads,
                                    const std::function<void(const CheckRecord&)>& progress = {});

}  // namespace genuscount
