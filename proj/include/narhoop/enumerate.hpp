#ifndef NARHOOP_ENUMERATE_HPP
#define NARHOOP_ENUMERATE_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "narhoop/axioms.hpp"
#include "narhoop/magma.hpp"

namespace narhoop {

enum class SearchMode : std::uint8_t { backtracking, generate_and_filter };

std::string_view search_mode_name(SearchMode m);
/// Throws UsageError on unknown names.
SearchMode parse_search_mode(std::string_view name);

/// Largest carrier the backtracking kernel supports.
inline constexpr std::size_t kMaxSearchSize = 8;

struct EnumerationTask {
  std::size_t size = 1;
  ModelClass model_class = ModelClass::narhoop;
  SearchMode mode = SearchMode::backtracking;
  /// Worker count hint; 1 selects the serial kernels.
  int parallel_width = 1;
};

struct SearchStats {
  std::uint64_t nodes = 0;       // backtracking: partial assignments visited
  std::uint64_t candidates = 0;  // complete tables tested against the class
  std::uint64_t accepted = 0;    // complete tables in the class (before dedup)
};

/// One canonical representative per isomorphism class, ascending.
/// Throws UsageError for size 0, size above kMaxSearchSize, or a
/// generate_and_filter request outside generate_and_filter_feasible.
std::vector<FiniteMagma> enumerate(const EnumerationTask& task, SearchStats* stats = nullptr);

/// Backtracking over table cells. Every axiom instance of the class whose
/// table lookups are all assigned is checked after each assignment; values
/// for a cell are restricted by the least-number heuristic.
std::vector<FiniteMagma> backtrack_serial(std::size_t size, ModelClass c, SearchStats* stats = nullptr);
/// Same search split over a frontier of disjoint prefixes.
std::vector<FiniteMagma> backtrack_parallel(std::size_t size, ModelClass c, int width,
                                            SearchStats* stats = nullptr);

/// Brute-force oracle. Sizes 1-3 scan the full n^(2n^2) table space. At
/// size 4 two classes use a complete restricted space: rres_n scans every
/// partial order with residuated right translations, right_quasigroup scans
/// column-bijective mul tables with div the column inverses.
bool generate_and_filter_feasible(std::size_t size, ModelClass c);

/// One pass over the candidate space, testing every requested class.
/// Result i corresponds to classes[i].
std::vector<std::vector<FiniteMagma>> generate_and_filter_serial(std::size_t size,
                                                                 std::span<const ModelClass> classes,
                                                                 SearchStats* stats = nullptr);
std::vector<std::vector<FiniteMagma>> generate_and_filter_parallel(std::size_t size,
                                                                   std::span<const ModelClass> classes,
                                                                   int width, SearchStats* stats = nullptr);

struct ClassCount {
  ModelClass model_class;
  std::size_t count;
};

struct CountTable {
  std::size_t size = 0;
  SearchMode mode = SearchMode::backtracking;
  std::vector<ClassCount> counts;
};

CountTable count(std::size_t size, std::span<const ModelClass> classes, SearchMode mode, int parallel_width = 1);

/// The worker count used when none is given: NARHOOP_THREADS if set and
/// positive, otherwise 1.
int default_parallel_width();

}  // namespace narhoop

#endif  // NARHOOP_ENUMERATE_HPP
