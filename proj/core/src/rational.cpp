#include "precint/rational.hpp"

namespace precint {

Rational Rational::parse(std::string_view text) {
  mpq_class v;
  if (v.set_str(std::string(text), 10) != 0) {
    throw PreconditionError("not a rational number: " + std::string(text));
  }
  if (v.get_den() == 0) throw DivisionByZero();
  return Rational(std::move(v));
}

}  // namespace precint
