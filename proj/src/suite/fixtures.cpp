#include "narhoop/errors.hpp"
#include "narhoop/suite.hpp"

namespace narhoop {

std::vector<NamedModel> builtin_fixtures() {
  auto m = FiniteMagma::from_rows;
  return {
      {"trivial", trivial_magma()},
      // x·y ordinary multiplication, x/y = y
      {"A1", m({{0, 0}, {0, 1}}, {{0, 1}, {0, 1}})},
      // x·y = x, x/y = 1
      {"A2", m({{0, 0}, {1, 1}}, {{1, 1}, {1, 1}})},
      // addition mod 2, x/y = 0 except 1/0 = 1
      {"A3", m({{0, 1}, {1, 0}}, {{0, 0}, {1, 0}})},
      // max, x/y addition mod 2
      {"A4", m({{0, 1}, {1, 1}}, {{0, 1}, {1, 0}})},
      // two-element right hoop: min with its residual
      {"G2", m({{0, 0}, {0, 1}}, {{1, 0}, {1, 1}})},
      {"Z2-xor", m({{0, 1}, {1, 0}}, {{0, 1}, {1, 0}})},
  };
}

FiniteMagma fixture(std::string_view name) {
  static const std::vector<NamedModel> fixtures = builtin_fixtures();
  for (const auto& f : fixtures)
    if (f.name == name) return f.magma;
  throw UsageError("unknown fixture: " + std::string(name));
}

}  // namespace narhoop
