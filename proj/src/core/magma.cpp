#include "narhoop/magma.hpp"

#include <sstream>

#include "narhoop/errors.hpp"

namespace narhoop {

namespace {

void validate_table(std::size_t n, const std::vector<Element>& table, const char* name) {
  if (table.size() != n * n) {
    std::ostringstream msg;
    msg << name << " table has " << table.size() << " entries, expected " << n * n;
    throw StructuralError(msg.str());
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= n) {
      std::ostringstream msg;
      msg << name << "[" << i / n << "][" << i % n << "] = " << int(table[i])
          << " is outside the carrier {0.." << n - 1 << "}";
      throw StructuralError(msg.str());
    }
  }
}

std::vector<Element> flatten(const std::vector<std::vector<int>>& rows, const char* name) {
  const std::size_t n = rows.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      std::ostringstream msg;
      msg << name << " row " << r << " has " << rows[r].size() << " entries, expected " << n;
      throw StructuralError(msg.str());
    }
    for (int v : rows[r]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        std::ostringstream msg;
        msg << name << " row " << r << " contains " << v << ", outside the carrier";
        throw StructuralError(msg.str());
      }
      flat.push_back(static_cast<Element>(v));
    }
  }
  return flat;
}

std::vector<std::vector<int>> unflatten(std::size_t n, const std::vector<Element>& flat) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rows[x][y] = flat[x * n + y];
  return rows;
}

void render(std::ostream& os, std::size_t n, const std::vector<Element>& flat) {
  os << '[';
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (i > 0) os << (i % n == 0 ? ';' : ',');
    os << int(flat[i]);
  }
  os << ']';
}

}  // namespace

FiniteMagma::FiniteMagma(std::size_t size, std::vector<Element> mul, std::vector<Element> div)
    : size_(size), mul_(std::move(mul)), div_(std::move(div)) {
  if (size_ == 0) throw StructuralError("carrier size must be positive");
  if (size_ > kMaxCarrier) throw StructuralError("carrier size exceeds 255");
  validate_table(size_, mul_, "mul");
  validate_table(size_, div_, "div");
}

FiniteMagma FiniteMagma::from_rows(const std::vector<std::vector<int>>& mul,
                                   const std::vector<std::vector<int>>& div) {
  if (mul.size() != div.size()) throw StructuralError("mul and div have different row counts");
  return FiniteMagma(mul.size(), flatten(mul, "mul"), flatten(div, "div"));
}

std::vector<std::vector<int>> FiniteMagma::mul_rows() const { return unflatten(size_, mul_); }
std::vector<std::vector<int>> FiniteMagma::div_rows() const { return unflatten(size_, div_); }

std::string FiniteMagma::to_string() const {
  std::ostringstream os;
  os << 'n' << size_ << " mul";
  render(os, size_, mul_);
  os << " div";
  render(os, size_, div_);
  return os.str();
}

std::strong_ordering operator<=>(const FiniteMagma& a, const FiniteMagma& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  if (auto c = a.mul_ <=> b.mul_; c != 0) return c;
  return a.div_ <=> b.div_;
}

FiniteMagma trivial_magma() { return FiniteMagma(1, {0}, {0}); }

}  // namespace narhoop
