#include "algkit/rational.hpp"

namespace algkit {

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  try {
    mpq_class q(std::string(text), 10);
    return from_mpq(q);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
}

}  // namespace algkit
