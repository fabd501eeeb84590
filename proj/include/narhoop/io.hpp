#ifndef NARHOOP_IO_HPP
#define NARHOOP_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "narhoop/axioms.hpp"
#include "narhoop/magma.hpp"

namespace narhoop {

using Json = nlohmann::ordered_json;

/// {"size": n, "mul": [[...]], "div": [[...]]}
Json magma_to_json(const FiniteMagma& m);
/// Throws StructuralError on missing keys, non-integer entries or bad tables.
/// Extra keys (e.g. "name") are ignored.
FiniteMagma magma_from_json(const Json& j);

struct NamedModel {
  std::string name;
  FiniteMagma magma;
};

/// Header line of a corpus file.
struct CorpusHeader {
  std::string model_class;
  std::size_t size = 0;
  std::size_t count = 0;
};

/// JSON-lines corpus: header line then one compact model per line.
void write_corpus(std::ostream& os, const CorpusHeader& header, const std::vector<FiniteMagma>& models);

struct Corpus {
  std::optional<CorpusHeader> header;
  std::vector<NamedModel> models;
};

/// Accepts a single model object, a JSON array of models, or a JSON-lines
/// corpus with or without its header. Models without a "name" key are named
/// "<source>#<index>". A header whose count disagrees with the body is a
/// StructuralError.
Corpus read_models(std::istream& is, const std::string& source);
Corpus read_models_file(const std::string& path);

Json report_to_json(const AxiomReport& r);
Json classification_to_json(const Classification& c);

}  // namespace narhoop

#endif  // NARHOOP_IO_HPP
