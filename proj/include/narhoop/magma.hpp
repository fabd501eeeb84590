#ifndef NARHOOP_MAGMA_HPP
#define NARHOOP_MAGMA_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace narhoop {

/// Carrier elements are the integers 0..n-1.
using Element = std::uint8_t;

inline constexpr std::size_t kMaxCarrier = 255;

/// Non-owning view of a pair of operation tables. Both tables are row-major
/// with the row being the left argument, so div(x, y) is x/y.
struct MagmaView {
  std::size_t n = 0;
  std::span<const Element> mul_table;
  std::span<const Element> div_table;

  Element mul(std::size_t x, std::size_t y) const { return mul_table[x * n + y]; }
  Element div(std::size_t x, std::size_t y) const { return div_table[x * n + y]; }

  /// x⊓y = (x/y)·y
  Element sqcap(std::size_t x, std::size_t y) const { return mul(div(x, y), y); }

  /// x ≤ y  iff  x = y⊓x
  bool leq(std::size_t x, std::size_t y) const { return sqcap(y, x) == x; }
};

/// A finite algebra (A,·,/) given by its two operation tables.
/// Immutable once constructed; construction validates every entry.
class FiniteMagma {
 public:
  /// Throws StructuralError on a zero or oversized carrier, wrong table
  /// lengths, or entries outside [0, size).
  FiniteMagma(std::size_t size, std::vector<Element> mul, std::vector<Element> div);

  static FiniteMagma from_rows(const std::vector<std::vector<int>>& mul,
                               const std::vector<std::vector<int>>& div);

  std::size_t size() const noexcept { return size_; }

  Element mul(std::size_t x, std::size_t y) const { return mul_[x * size_ + y]; }
  Element div(std::size_t x, std::size_t y) const { return div_[x * size_ + y]; }
  Element sqcap(std::size_t x, std::size_t y) const { return mul(div(x, y), y); }
  bool leq(std::size_t x, std::size_t y) const { return sqcap(y, x) == x; }

  const std::vector<Element>& mul_table() const noexcept { return mul_; }
  const std::vector<Element>& div_table() const noexcept { return div_; }

  MagmaView view() const noexcept { return MagmaView{size_, mul_, div_}; }

  std::vector<std::vector<int>> mul_rows() const;
  std::vector<std::vector<int>> div_rows() const;

  /// Compact single-line rendering, e.g. "n2 mul[0,0;0,1] div[1,0;1,1]".
  std::string to_string() const;

  friend bool operator==(const FiniteMagma&, const FiniteMagma&) = default;

  /// Size first, then mul row-major, then div row-major.
  friend std::strong_ordering operator<=>(const FiniteMagma& a, const FiniteMagma& b);

 private:
  std::size_t size_;
  std::vector<Element> mul_;
  std::vector<Element> div_;
};

/// The magma with one element.
FiniteMagma trivial_magma();

}  // namespace narhoop

#endif  // NARHOOP_MAGMA_HPP
