#include "narhoop/term.hpp"

#include <stdexcept>

namespace narhoop {

Term::Term(Kind kind, int index, std::shared_ptr<const Term> lhs, std::shared_ptr<const Term> rhs)
    : kind_(kind), index_(index), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

Term Term::var(int index) { return Term(Kind::var, index, nullptr, nullptr); }

Term operator*(const Term& a, const Term& b) {
  return Term(Term::Kind::mul, -1, std::make_shared<const Term>(a), std::make_shared<const Term>(b));
}

Term operator/(const Term& a, const Term& b) {
  return Term(Term::Kind::div, -1, std::make_shared<const Term>(a), std::make_shared<const Term>(b));
}

Element Term::eval(const MagmaView& m, std::span<const Element> env) const {
  switch (kind_) {
    case Kind::var:
      if (index_ < 0 || static_cast<std::size_t>(index_) >= env.size())
        throw std::out_of_range("unbound variable in term");
      return env[index_];
    case Kind::mul: return m.mul(lhs_->eval(m, env), rhs_->eval(m, env));
    case Kind::div: return m.div(lhs_->eval(m, env), rhs_->eval(m, env));
  }
  return 0;
}

std::string Term::to_string() const {
  switch (kind_) {
    case Kind::var: return "v" + std::to_string(index_);
    case Kind::mul: return "(" + lhs_->to_string() + "*" + rhs_->to_string() + ")";
    case Kind::div: return "(" + lhs_->to_string() + "/" + rhs_->to_string() + ")";
  }
  return {};
}

Term meet(const Term& a, const Term& b) { return (a / b) * b; }

}  // namespace narhoop
