#include "ncs/rational.hpp"

#include <algorithm>
#include <cctype>

#include "ncs/error.hpp"

namespace ncs {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw ValidationError("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  auto slash = s.find('/');
  auto digits_ok = [](std::string_view d, bool allow_sign) {
    if (allow_sign && !d.empty() && d.front() == '-') d.remove_prefix(1);
    return !d.empty() && std::all_of(d.begin(), d.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  if (slash == std::string::npos) {
    if (!digits_ok(s, true)) throw ValidationError("malformed rational '" + std::string(text) + "'");
    return Rational(mpz_class(s));
  }
  std::string_view num(s.data(), slash), den(s.data() + slash + 1, s.size() - slash - 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  mpz_class d{std::string(den)};
  if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  Rational r(mpz_class(std::string(num)), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

}  // namespace ncs
