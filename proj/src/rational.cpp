#include "orbsurf/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace orbsurf {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (mpz_sgn(mpq_denref(v_.get_mpq_t())) == 0) throw Error("rational with zero denominator");
  v_.canonicalize();
}

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (to <= from) return false;
  for (size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const size_t slash = text.find('/');
  const size_t num_end = slash == std::string::npos ? text.size() : slash;
  const size_t num_start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (!all_digits(text, num_start, num_end)) {
    throw ParseError("bad rational literal '" + text + "'");
  }
  mpz_class num(text.substr(0, num_end), 10);
  mpz_class den(1);
  if (slash != std::string::npos) {
    if (!all_digits(text, slash + 1, text.size())) {
      throw ParseError("bad rational literal '" + text + "'");
    }
    den = mpz_class(text.substr(slash + 1), 10);
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  }
  mpq_class q(num);
  q /= mpq_class(den);
  return Rational(std::move(q));
}

std::string Rational::str() const {
  std::ostringstream os;
  os << v_;
  return os.str();
}

long Rational::to_long() const {
  if (!is_integer()) throw Error("rational " + str() + " is not an integer");
  if (!v_.get_num().fits_slong_p()) throw Error("integer " + str() + " out of machine range");
  return v_.get_num().get_si();
}

long Rational::floor_long() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), mpq_numref(v_.get_mpq_t()), mpq_denref(v_.get_mpq_t()));
  if (!q.fits_slong_p()) throw Error("floor of " + str() + " out of machine range");
  return q.get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.v_; }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace orbsurf
