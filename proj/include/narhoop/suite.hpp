#ifndef NARHOOP_SUITE_HPP
#define NARHOOP_SUITE_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "narhoop/io.hpp"
#include "narhoop/magma.hpp"

namespace narhoop {

/// trivial, A1..A4, G2, Z2-xor in that order.
std::vector<NamedModel> builtin_fixtures();

/// Throws UsageError for unknown names.
FiniteMagma fixture(std::string_view name);

enum class CaseId : std::uint8_t {
  THM_VARIETY_FWD,    // narhoop (Rres + (N')) ⟹ N1..N4
  THM_VARIETY_CONV,   // N1..N4 ⟹ N5..N7, partial order, Rres, (N')
  INDEP_A1,
  INDEP_A2,
  INDEP_A3,
  INDEP_A4,
  CHAR_RQ,            // narhoop: RQ ⟺ ≤ is equality
  CHAR_RH,            // narhoop: right hoop identities ⟺ RH2 and the quasiequation
  THM_LNB,
  THM_COMM_MEET,
  THM_PRINCIPAL,
  LEM_PREUNITAL,
  LEM_UNITAL,
  THM_FINITE_UNIQUE,  // hypothesis: Rres + (N), unital
  THM_FINITE_UNIQUE_NARHOOP,  // same statement, unital narhoops only
  PROP_U,             // unital narhoop: x ≤ y ⟺ y/x = 1
  THM_TOP_COMM,
  THM_BOTTOM_TOP,
  LEM_CONG,
  THM_CONG,
  LEM_PREORDER,
  THM_NORMAL,
};

std::span<const CaseId> all_cases();
std::string_view case_name(CaseId id);
/// Throws UsageError for unknown names.
CaseId parse_case(std::string_view name);

enum class Outcome : std::uint8_t { pass, fail, skip };

std::string_view outcome_name(Outcome o);

struct CaseResult {
  Outcome outcome = Outcome::skip;
  std::string witness;  // set on FAIL
};

/// One case on one model. Never throws for valid input: an exception raised
/// by a checker turns into FAIL with its message as the witness.
CaseResult run_case(CaseId id, const FiniteMagma& m);

struct CaseSummary {
  CaseId id;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
};

struct SuiteReport {
  std::vector<std::string> models;
  std::vector<CaseId> cases;
  /// results[c * models.size() + k] is case c on model k.
  std::vector<CaseResult> results;

  const CaseResult& at(std::size_t case_index, std::size_t model_index) const {
    return results[case_index * models.size() + model_index];
  }
  std::vector<CaseSummary> summary() const;
  std::size_t failures() const;

  /// Per case: counts, a verdict string with one letter (P/F/S) per model,
  /// and the failures with witnesses.
  Json to_json() const;
  std::string to_text() const;
};

/// Serial reference.
SuiteReport run_suite_serial(const std::vector<NamedModel>& models, std::span<const CaseId> cases);

/// Models are split across `width` OpenMP threads; the report is identical to
/// the serial one.
SuiteReport run_suite(const std::vector<NamedModel>& models, std::span<const CaseId> cases, int width = 1);

/// Fixtures plus every rres_n and every N1..N4 model of sizes 1..max_size,
/// deduplicated by canonical form. Enumerated models are named like
/// "rres_n/3#12" after the first class that produced them.
std::vector<NamedModel> verification_corpus(std::size_t max_size, int width = 1);

}  // namespace narhoop

#endif  // NARHOOP_SUITE_HPP
