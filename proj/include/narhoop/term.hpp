#ifndef NARHOOP_TERM_HPP
#define NARHOOP_TERM_HPP

#include <memory>
#include <span>
#include <string>

#include "narhoop/magma.hpp"

namespace narhoop {

/// A term over · and / with numbered variables. Evaluation walks the tree,
/// independent of the hand-written table code in the axiom checkers.
class Term {
 public:
  static Term var(int index);

  friend Term operator*(const Term& a, const Term& b);
  friend Term operator/(const Term& a, const Term& b);

  /// env[i] is the value of variable i.
  Element eval(const MagmaView& m, std::span<const Element> env) const;
  std::string to_string() const;

 private:
  enum class Kind { var, mul, div };

  Term(Kind kind, int index, std::shared_ptr<const Term> lhs, std::shared_ptr<const Term> rhs);

  Kind kind_;
  int index_;
  std::shared_ptr<const Term> lhs_;
  std::shared_ptr<const Term> rhs_;
};

/// (a/b)·b
Term meet(const Term& a, const Term& b);

}  // namespace narhoop

#endif  // NARHOOP_TERM_HPP
