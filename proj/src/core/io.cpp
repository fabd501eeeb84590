#include "narhoop/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "narhoop/errors.hpp"

namespace narhoop {

namespace {

std::vector<std::vector<int>> rows_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw StructuralError(std::string("model is missing the '") + key + "' table");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j[key]) {
    if (!row.is_array()) throw StructuralError(std::string(key) + " rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw StructuralError(std::string(key) + " entries must be integers");
      r.push_back(v.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

bool is_header(const Json& j) { return j.is_object() && j.contains("class") && !j.contains("mul"); }

std::string model_name(const Json& j, const std::string& source, std::size_t index) {
  if (j.contains("name") && j["name"].is_string()) return j["name"].get<std::string>();
  return source + "#" + std::to_string(index);
}

}  // namespace

Json magma_to_json(const FiniteMagma& m) {
  Json j;
  j["size"] = m.size();
  j["mul"] = m.mul_rows();
  j["div"] = m.div_rows();
  return j;
}

FiniteMagma magma_from_json(const Json& j) {
  if (!j.is_object()) throw StructuralError("model must be a JSON object");
  FiniteMagma m = FiniteMagma::from_rows(rows_from_json(j, "mul"), rows_from_json(j, "div"));
  if (j.contains("size")) {
    if (!j["size"].is_number_integer() || j["size"].get<long long>() != static_cast<long long>(m.size()))
      throw StructuralError("'size' does not match the table dimensions");
  }
  return m;
}

void write_corpus(std::ostream& os, const CorpusHeader& header, const std::vector<FiniteMagma>& models) {
  Json h;
  h["class"] = header.model_class;
  h["size"] = header.size;
  h["count"] = header.count;
  os << h.dump() << '\n';
  for (const auto& m : models) os << magma_to_json(m).dump() << '\n';
}

Corpus read_models(std::istream& is, const std::string& source) {
  std::stringstream buffer;
  buffer << is.rdbuf();
  const std::string text = buffer.str();

  Corpus corpus;
  // Whole-document forms first: a single object or an array.
  Json whole = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (!whole.is_discarded()) {
    if (whole.is_array()) {
      for (std::size_t i = 0; i < whole.size(); ++i)
        corpus.models.push_back({model_name(whole[i], source, i), magma_from_json(whole[i])});
      return corpus;
    }
    if (is_header(whole)) {
      corpus.header = CorpusHeader{whole["class"].get<std::string>(), whole.value("size", std::size_t{0}),
                                   whole.value("count", std::size_t{0})};
    } else {
      corpus.models.push_back({model_name(whole, source, 0), magma_from_json(whole)});
      return corpus;
    }
  } else {
    std::istringstream lines(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      Json j = Json::parse(line, nullptr, false);
      if (j.is_discarded())
        throw StructuralError(source + ":" + std::to_string(lineno) + ": invalid JSON");
      if (is_header(j)) {
        if (corpus.header || !corpus.models.empty())
          throw StructuralError(source + ":" + std::to_string(lineno) + ": header must be the first line");
        corpus.header = CorpusHeader{j["class"].get<std::string>(), j.value("size", std::size_t{0}),
                                     j.value("count", std::size_t{0})};
        continue;
      }
      const std::size_t index = corpus.models.size();
      corpus.models.push_back({model_name(j, source, index), magma_from_json(j)});
    }
  }
  if (corpus.header && corpus.header->count != corpus.models.size())
    throw StructuralError(source + ": header announces " + std::to_string(corpus.header->count) +
                          " models but the file holds " + std::to_string(corpus.models.size()));
  return corpus;
}

Corpus read_models_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return read_models(in, path);
}

Json report_to_json(const AxiomReport& r) {
  static constexpr const char* kVars[] = {"x", "y", "z"};
  Json j = Json::object();
  for (const auto& v : r.verdicts) {
    Json entry;
    entry["holds"] = v.holds;
    if (!v.holds) {
      Json w = Json::object();
      for (std::size_t k = 0; k < v.witness.size(); ++k) w[kVars[k]] = int(v.witness[k]);
      entry["witness"] = w;
    }
    j[std::string(axiom_name(v.axiom))] = entry;
  }
  return j;
}

Json classification_to_json(const Classification& c) {
  Json j;
  j["is_right_residuated"] = c.is_right_residuated;
  j["is_narhoop"] = c.is_narhoop;
  j["is_right_quasigroup"] = c.is_right_quasigroup;
  j["is_right_hoop"] = c.is_right_hoop;
  j["is_right_hoop_by_characterization"] = c.is_right_hoop_by_characterization;
  j["is_unital"] = c.is_unital;
  j["sqcap_commutative"] = c.sqcap_commutative;
  j["sqcap_associative"] = c.sqcap_associative;
  j["order_is_equality"] = c.order_is_equality;
  return j;
}

}  // namespace narhoop
