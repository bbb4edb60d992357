#include "polychow/rational.hpp"

#include <cctype>
#include <ostream>

#include "polychow/error.hpp"

namespace polychow {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegeneratePolytope: return "DegeneratePolytope";
    case ErrorKind::NotDelzant: return "NotDelzant";
    case ErrorKind::NotLatticePolygon: return "NotLatticePolygon";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::InvalidCutVertex: return "InvalidCutVertex";
    case ErrorKind::OverlappingCuts: return "OverlappingCuts";
    case ErrorKind::CutThroughEdge: return "CutThroughEdge";
    case ErrorKind::VerificationMismatch: return "VerificationMismatch";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::GroupClosureOverflow: return "GroupClosureOverflow";
    case ErrorKind::EmptyConfiguration: return "EmptyConfiguration";
    case ErrorKind::EnumerationLimit: return "EnumerationLimit";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(long long num, long long den)
    : Rational(Integer(std::to_string(num)), Integer(std::to_string(den))) {}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') pos = 1;
  if (pos == s.size()) return false;
  for (std::size_t i = pos; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  Integer num, den = 1;
  bool ok = false;
  if (slash == std::string_view::npos) {
    ok = parse_integer(s, num);
  } else {
    const auto d = s.substr(slash + 1);
    // The denominator carries no sign.
    ok = parse_integer(s.substr(0, slash), num) && !d.empty() && d[0] != '-' && d[0] != '+' &&
         parse_integer(d, den) && den != 0;
  }
  if (!ok) throw Error(ErrorKind::ParseError, "not a rational literal: \"" + std::string(text) + "\"");
  return Rational(num, den);
}

Integer Rational::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Integer Rational::ceil() const {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, unsigned e) {
  Rational out = 1;
  for (unsigned i = 0; i < e; ++i) out *= r;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "integer out of 64-bit range: " + z.get_str());
  return z.get_si();
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace polychow
