#include <iomanip>
#include <set>
#include <sstream>

#include "narhoop/axioms.hpp"
#include "narhoop/canonical.hpp"
#include "narhoop/enumerate.hpp"
#include "narhoop/suite.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace narhoop {

namespace {

SuiteReport empty_report(const std::vector<NamedModel>& models, std::span<const CaseId> cases) {
  SuiteReport r;
  for (const auto& m : models) r.models.push_back(m.name);
  r.cases.assign(cases.begin(), cases.end());
  r.results.resize(cases.size() * models.size());
  return r;
}

char letter(Outcome o) { return o == Outcome::pass ? 'P' : o == Outcome::fail ? 'F' : 'S'; }

}  // namespace

std::vector<CaseSummary> SuiteReport::summary() const {
  std::vector<CaseSummary> out;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    CaseSummary s{cases[c]};
    for (std::size_t k = 0; k < models.size(); ++k) {
      switch (at(c, k).outcome) {
        case Outcome::pass: ++s.pass; break;
        case Outcome::fail: ++s.fail; break;
        case Outcome::skip: ++s.skip; break;
      }
    }
    out.push_back(s);
  }
  return out;
}

std::size_t SuiteReport::failures() const {
  std::size_t f = 0;
  for (const auto& r : results) f += r.outcome == Outcome::fail;
  return f;
}

Json SuiteReport::to_json() const {
  Json j;
  j["models"] = models;
  Json cs = Json::array();
  std::size_t pass = 0, fail = 0, skip = 0;
  const auto sums = summary();
  for (std::size_t c = 0; c < cases.size(); ++c) {
    Json entry;
    entry["id"] = case_name(cases[c]);
    entry["pass"] = sums[c].pass;
    entry["fail"] = sums[c].fail;
    entry["skip"] = sums[c].skip;
    std::string verdicts(models.size(), '?');
    Json failures = Json::array();
    for (std::size_t k = 0; k < models.size(); ++k) {
      const CaseResult& r = at(c, k);
      verdicts[k] = letter(r.outcome);
      if (r.outcome == Outcome::fail) failures.push_back({{"model", models[k]}, {"witness", r.witness}});
    }
    entry["verdicts"] = verdicts;
    entry["failures"] = failures;
    cs.push_back(entry);
    pass += sums[c].pass;
    fail += sums[c].fail;
    skip += sums[c].skip;
  }
  j["cases"] = cs;
  j["totals"] = {{"pass", pass}, {"fail", fail}, {"skip", skip}};
  return j;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << std::left << std::setw(28) << "case" << std::right << std::setw(8) << "PASS" << std::setw(8) << "FAIL"
     << std::setw(8) << "SKIP" << '\n';
  const auto sums = summary();
  for (const auto& s : sums)
    os << std::left << std::setw(28) << case_name(s.id) << std::right << std::setw(8) << s.pass << std::setw(8)
       << s.fail << std::setw(8) << s.skip << '\n';
  for (std::size_t c = 0; c < cases.size(); ++c)
    for (std::size_t k = 0; k < models.size(); ++k)
      if (at(c, k).outcome == Outcome::fail)
        os << "FAIL " << case_name(cases[c]) << " on " << models[k] << ": " << at(c, k).witness << '\n';
  os << models.size() << " models, " << failures() << " failures\n";
  return os.str();
}

SuiteReport run_suite_serial(const std::vector<NamedModel>& models, std::span<const CaseId> cases) {
  SuiteReport r = empty_report(models, cases);
  for (std::size_t c = 0; c < cases.size(); ++c)
    for (std::size_t k = 0; k < models.size(); ++k)
      r.results[c * models.size() + k] = run_case(cases[c], models[k].magma);
  return r;
}

SuiteReport run_suite(const std::vector<NamedModel>& models, std::span<const CaseId> cases, int width) {
  if (width <= 1) return run_suite_serial(models, cases);
  SuiteReport r = empty_report(models, cases);
  const long count = static_cast<long>(models.size());
  // Each iteration writes its own column of the result matrix.
#pragma omp parallel for schedule(dynamic, 4) num_threads(width)
  for (long k = 0; k < count; ++k)
    for (std::size_t c = 0; c < cases.size(); ++c)
      r.results[c * models.size() + static_cast<std::size_t>(k)] = run_case(cases[c], models[k].magma);
  return r;
}

std::vector<NamedModel> verification_corpus(std::size_t max_size, int width) {
  std::vector<NamedModel> out;
  std::set<CanonicalForm> seen;
  for (auto& f : builtin_fixtures()) {
    seen.insert(canonicalize(f.magma));
    out.push_back(std::move(f));
  }
  for (std::size_t n = 1; n <= max_size; ++n)
    for (ModelClass c : {ModelClass::rres_n, ModelClass::narhoop}) {
      const auto models = enumerate(EnumerationTask{n, c, SearchMode::backtracking, width});
      for (std::size_t i = 0; i < models.size(); ++i) {
        // Enumerated models are already canonical.
        if (!seen.insert(CanonicalForm{models[i]}).second) continue;
        out.push_back({std::string(model_class_name(c)) + "/" + std::to_string(n) + "#" + std::to_string(i),
                       models[i]});
      }
    }
  return out;
}

}  // namespace narhoop
