#include "cusp/rational.hpp"

#include "cusp/error.hpp"

namespace cusp {

Rational make_rational(std::int64_t num, std::int64_t den) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  Rational out{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  Rational out;
  if (out.set_str(s, 10) != 0 || out.get_den() == 0) {
    throw Error(ErrorCode::kParse, "cannot parse '" + s + "' as a rational");
  }
  out.canonicalize();
  return out;
}

}  // namespace cusp
