#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include "narhoop/axioms.hpp"
#include "narhoop/canonical.hpp"
#include "narhoop/congruence.hpp"
#include "narhoop/enumerate.hpp"
#include "narhoop/errors.hpp"
#include "narhoop/io.hpp"
#include "narhoop/suite.hpp"

using namespace narhoop;

namespace {

constexpr std::size_t kSizeCap = 5;

struct Options {
  std::string format = "json";
  int threads = default_parallel_width();
  std::string model_class;
  std::size_t size = 0;
  std::string mode = "backtracking";
  std::string output;
  std::string input;
  std::string dir;
  bool force = false;
};

void check_size(const Options& o) {
  if (o.size < 1) throw UsageError("--size must be at least 1");
  if (o.size > kSizeCap && !o.force)
    throw UsageError("--size above " + std::to_string(kSizeCap) + " needs --force");
}

bool text(const Options& o) { return o.format == "text"; }

Json named(const NamedModel& m) {
  Json j;
  j["name"] = m.name;
  const Json body = magma_to_json(m.magma);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

// Writes to -o when given, otherwise stdout.
template <typename F>
void emit(const Options& o, F&& write) {
  if (o.output.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw UsageError("cannot write " + o.output);
  write(f);
}

std::set<CanonicalForm> as_set(const std::vector<FiniteMagma>& ms) {
  std::set<CanonicalForm> s;
  for (const auto& m : ms) s.insert(canonicalize(m));
  return s;
}

int cmd_enumerate(const Options& o) {
  check_size(o);
  const ModelClass c = parse_model_class(o.model_class);
  std::vector<FiniteMagma> models;
  int status = 0;
  if (o.mode == "both") {
    const auto bt = enumerate({o.size, c, SearchMode::backtracking, o.threads});
    const auto gf = enumerate({o.size, c, SearchMode::generate_and_filter, o.threads});
    std::cerr << "backtracking: " << bt.size() << ", generate_and_filter: " << gf.size() << '\n';
    if (as_set(bt) != as_set(gf)) {
      std::cerr << "MODE MISMATCH: the two searches found different models\n";
      status = 1;
    }
    models = bt;
  } else {
    models = enumerate({o.size, c, parse_search_mode(o.mode), o.threads});
  }
  emit(o, [&](std::ostream& os) {
    if (text(o)) {
      os << model_class_name(c) << " size " << o.size << ": " << models.size() << " models\n";
      for (const auto& m : models) os << m.to_string() << '\n';
    } else {
      write_corpus(os, CorpusHeader{std::string(model_class_name(c)), o.size, models.size()}, models);
    }
  });
  return status;
}

std::vector<Axiom> axioms_for(const FiniteMagma& m) {
  std::vector<Axiom> out;
  for (Axiom a : all_axioms())
    if (a != Axiom::U || is_unital(m.view())) out.push_back(a);
  return out;
}

int cmd_check(const Options& o) {
  const Corpus corpus = read_models_file(o.input);
  Json out = Json::array();
  for (const auto& nm : corpus.models) {
    const AxiomReport r = check_axioms(nm.magma, axioms_for(nm.magma));
    if (text(o)) {
      std::cout << nm.name << '\n';
      for (const auto& v : r.verdicts) std::cout << "  " << v.describe() << '\n';
    } else {
      out.push_back({{"name", nm.name}, {"report", report_to_json(r)}});
    }
  }
  if (!text(o)) std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_classify(const Options& o) {
  const Corpus corpus = read_models_file(o.input);
  Json out = Json::array();
  for (const auto& nm : corpus.models) {
    const Classification c = classify(nm.magma);
    if (text(o)) {
      std::cout << nm.name << ": " << classification_to_json(c).dump() << '\n';
    } else {
      out.push_back({{"name", nm.name},
                     {"canonical", magma_to_json(canonicalize(nm.magma).magma)},
                     {"classification", classification_to_json(c)}});
    }
  }
  if (!text(o)) std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_congruences(const Options& o) {
  const Corpus corpus = read_models_file(o.input);
  Json out = Json::array();
  int status = 0;
  for (const auto& nm : corpus.models) {
    Json entry{{"name", nm.name}};
    Json list = Json::array();
    for (const auto& c : all_congruences(nm.magma)) list.push_back(congruence_to_json(c));
    entry["congruences"] = list;
    if (is_member(nm.magma.view(), ModelClass::narhoop)) {
      const Correspondence corr = unital_correspondence(nm.magma);
      entry["correspondence"] = corr.bijective ? Json("bijective") : Json(corr.witness);
      if (!corr.bijective) status = 1;
    }
    if (text(o)) {
      std::cout << nm.name << ": " << list.size() << " congruences\n";
      for (const auto& c : list) std::cout << "  " << c.dump() << '\n';
      if (entry.contains("correspondence"))
        std::cout << "  unital congruences <-> normal subsets: " << entry["correspondence"].get<std::string>() << '\n';
    } else {
      out.push_back(entry);
    }
  }
  if (!text(o)) std::cout << out.dump(2) << '\n';
  return status;
}

int cmd_normal(const Options& o) {
  const Corpus corpus = read_models_file(o.input);
  Json out = Json::array();
  for (const auto& nm : corpus.models) {
    Json entry{{"name", nm.name}};
    const bool nh = is_member(nm.magma.view(), ModelClass::narhoop);
    entry["narhoop"] = nh;
    Json list = Json::array();
    if (nh)
      for (const auto& s : normal_subsets(nm.magma)) list.push_back(s);
    entry["normal_subsets"] = list;
    if (text(o))
      std::cout << nm.name << ": " << (nh ? list.dump() : std::string("not a narhoop")) << '\n';
    else
      out.push_back(entry);
  }
  if (!text(o)) std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_verify(const Options& o) {
  check_size(o);
  const auto corpus = verification_corpus(o.size, o.threads);
  const SuiteReport r = run_suite(corpus, all_cases(), o.threads);
  emit(o, [&](std::ostream& os) {
    if (text(o)) {
      os << r.to_text();
    } else {
      Json j{{"size", o.size}};
      const Json body = r.to_json();
      for (const auto& [k, v] : body.items()) j[k] = v;
      os << j.dump(1) << '\n';
    }
  });
  return r.failures() ? 1 : 0;
}

int cmd_fixtures(const Options& o) {
  const auto fixtures = builtin_fixtures();
  if (!o.dir.empty()) {
    std::filesystem::create_directories(o.dir);
    for (const auto& f : fixtures) {
      std::string file = f.name;
      for (char& ch : file) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      std::ofstream os(std::filesystem::path(o.dir) / (file + ".json"));
      if (!os) throw UsageError("cannot write into " + o.dir);
      os << named(f).dump() << '\n';
    }
    return 0;
  }
  emit(o, [&](std::ostream& os) {
    Json arr = Json::array();
    for (const auto& f : fixtures) arr.push_back(named(f));
    os << arr.dump(2) << '\n';
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite models of nonassociative right hoops"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--threads", o.threads, "worker threads (default: NARHOOP_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* en = app.add_subcommand("enumerate", "enumerate one class at one size");
  en->add_option("--class", o.model_class, "rres_n, narhoop, right_quasigroup, right_hoop, unital_narhoop")
      ->required();
  en->add_option("--size", o.size)->required();
  en->add_option("--mode", o.mode)->check(CLI::IsMember({"backtracking", "generate_and_filter", "both"}));
  en->add_option("-o,--output", o.output, "corpus file (JSON lines)");
  en->add_flag("--force", o.force, "allow sizes above 5");

  auto* ch = app.add_subcommand("check", "axiom report for each model in FILE");
  ch->add_option("file", o.input)->required();
  auto* cl = app.add_subcommand("classify", "class flags for each model in FILE");
  cl->add_option("file", o.input)->required();
  auto* co = app.add_subcommand("congruences", "congruence list for each model in FILE");
  co->add_option("file", o.input)->required();
  auto* ns = app.add_subcommand("normal-subs", "normal subnarhoops of each model in FILE");
  ns->add_option("file", o.input)->required();

  auto* ve = app.add_subcommand("verify", "enumerate up to --size and run every theorem case");
  ve->add_option("--size", o.size)->required();
  ve->add_option("-o,--output", o.output);
  ve->add_flag("--force", o.force, "allow sizes above 5");

  auto* fx = app.add_subcommand("fixtures", "dump the builtin fixtures");
  fx->add_option("-o,--output", o.output);
  fx->add_option("--dir", o.dir, "write one <name>.json per fixture");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*en) return cmd_enumerate(o);
    if (*ch) return cmd_check(o);
    if (*cl) return cmd_classify(o);
    if (*co) return cmd_congruences(o);
    if (*ns) return cmd_normal(o);
    if (*ve) return cmd_verify(o);
    if (*fx) return cmd_fixtures(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
