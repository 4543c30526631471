#include "rootgraded/scalar.hpp"

#include <cctype>

#include "rootgraded/errors.hpp"

namespace rootgraded {

namespace {

bool valid_rational_text(const std::string& s) {
  std::size_t i = 0;
  auto digits = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return pos > start;
  };
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (!digits(i)) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (!digits(i)) return false;
  return i == s.size();
}

}  // namespace

Scalar scalar_from_string(const std::string& text) {
  if (!valid_rational_text(text)) {
    throw document_error("malformed rational '" + text + "'");
  }
  Scalar x;
  if (x.set_str(text, 10) != 0) {
    throw document_error("malformed rational '" + text + "'");
  }
  if (x.get_den() == 0) {
    throw document_error("zero denominator in '" + text + "'");
  }
  x.canonicalize();
  return x;
}

std::string scalar_to_string(const Scalar& x) { return x.get_str(); }

bool scalar_is_integer(const Scalar& x) { return x.get_den() == 1; }

long scalar_to_long(const Scalar& x) {
  if (!scalar_is_integer(x) || !x.get_num().fits_slong_p()) {
    throw invalid_parameter_error("scalar " + scalar_to_string(x) +
                                  " is not a machine integer");
  }
  return x.get_num().get_si();
}

long scalar_floor_long(const Scalar& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  if (!q.fits_slong_p()) {
    throw invalid_parameter_error("floor of " + scalar_to_string(x) +
                                  " does not fit in long");
  }
  return q.get_si();
}

long scalar_ceil_long(const Scalar& x) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  if (!q.fits_slong_p()) {
    throw invalid_parameter_error("ceiling of " + scalar_to_string(x) +
                                  " does not fit in long");
  }
  return q.get_si();
}

}  // namespace rootgraded
