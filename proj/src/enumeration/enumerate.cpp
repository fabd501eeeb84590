#include "narhoop/enumerate.hpp"

#include <cstdlib>
#include <string>

#include "narhoop/errors.hpp"

namespace narhoop {

std::string_view search_mode_name(SearchMode m) {
  return m == SearchMode::backtracking ? "backtracking" : "generate_and_filter";
}

SearchMode parse_search_mode(std::string_view name) {
  if (name == "backtracking") return SearchMode::backtracking;
  if (name == "generate_and_filter") return SearchMode::generate_and_filter;
  throw UsageError("unknown mode '" + std::string(name) + "' (expected backtracking or generate_and_filter)");
}

std::vector<FiniteMagma> enumerate(const EnumerationTask& task, SearchStats* stats) {
  if (task.size == 0) throw UsageError("size must be at least 1");
  if (task.mode == SearchMode::backtracking) {
    return task.parallel_width > 1 ? backtrack_parallel(task.size, task.model_class, task.parallel_width, stats)
                                   : backtrack_serial(task.size, task.model_class, stats);
  }
  const ModelClass one[] = {task.model_class};
  auto result = task.parallel_width > 1 ? generate_and_filter_parallel(task.size, one, task.parallel_width, stats)
                                        : generate_and_filter_serial(task.size, one, stats);
  return std::move(result.front());
}

CountTable count(std::size_t size, std::span<const ModelClass> classes, SearchMode mode, int parallel_width) {
  CountTable table{size, mode, {}};
  if (mode == SearchMode::generate_and_filter) {
    auto sets = parallel_width > 1 ? generate_and_filter_parallel(size, classes, parallel_width)
                                   : generate_and_filter_serial(size, classes);
    for (std::size_t i = 0; i < classes.size(); ++i) table.counts.push_back({classes[i], sets[i].size()});
    return table;
  }
  for (ModelClass c : classes) {
    const auto models = enumerate(EnumerationTask{size, c, mode, parallel_width});
    table.counts.push_back({c, models.size()});
  }
  return table;
}

int default_parallel_width() {
  if (const char* env = std::getenv("NARHOOP_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 1;
}

}  // namespace narhoop
