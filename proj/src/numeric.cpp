#include "qk/numeric.hpp"

#include "qk/error.hpp"

#include <cmath>
#include <limits>
#include <iomanip>
#include <sstream>

namespace qk {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidRootSystem: return "E_INVALID_ROOT_SYSTEM";
    case ErrorCode::DimensionMismatch: return "E_DIMENSION_MISMATCH";
    case ErrorCode::NotDominant: return "E_NOT_DOMINANT";
    case ErrorCode::OutOfDomain: return "E_OUT_OF_DOMAIN";
    case ErrorCode::InvalidModel: return "E_INVALID_MODEL";
    case ErrorCode::InvalidLabel: return "E_INVALID_LABEL";
    case ErrorCode::NotTraceSymmetric: return "E_NOT_TRACE_SYMMETRIC";
    case ErrorCode::MissingQData: return "E_MISSING_Q_DATA";
    case ErrorCode::NotExact: return "E_NOT_EXACT";
    case ErrorCode::Divergent: return "E_DIVERGENT";
    case ErrorCode::Inconclusive: return "E_INCONCLUSIVE";
    case ErrorCode::InvalidArgument: return "E_INVALID_ARGUMENT";
    case ErrorCode::MalformedSpec: return "E_MALFORMED_SPEC";
    case ErrorCode::UnknownCommand: return "E_UNKNOWN_COMMAND";
    case ErrorCode::ConflictingFlags: return "E_CONFLICTING_FLAGS";
    case ErrorCode::Io: return "E_IO";
  }
  return "E_UNKNOWN";
}

unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

PrecisionScope::PrecisionScope(unsigned bits)
    : previous_digits10_(Real::default_precision()) {
  if (bits < kMinPrecisionBits) {
    throw Error(ErrorCode::InvalidArgument,
                "precision must be at least 64 bits, got " + std::to_string(bits));
  }
  Real::default_precision(digits10_for_bits(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(previous_digits10_); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw Error(ErrorCode::MalformedSpec, "not a number: '" + std::string(whole) + "'");
  }
  Integer v(std::string(s), 10);
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  if (text.empty()) throw Error(ErrorCode::MalformedSpec, "empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), whole);
    Integer den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw Error(ErrorCode::MalformedSpec, "zero denominator in '" + std::string(whole) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    Integer ex = parse_integer(text.substr(e + 1), whole);
    if (!ex.fits_slong_p() || abs(ex) > 100000) {
      throw Error(ErrorCode::MalformedSpec, "exponent out of range in '" + std::string(whole) + "'");
    }
    exponent = ex.get_si();
    text = text.substr(0, e);
  }

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot);
    std::string_view fp = text.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) {
      throw Error(ErrorCode::MalformedSpec, "not a number: '" + std::string(whole) + "'");
    }
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(text)) throw Error(ErrorCode::MalformedSpec, "not a number: '" + std::string(whole) + "'");
    digits = std::string(text);
  }
  Rational r(Integer(digits, 10));
  r = r * rational_pow(Rational(10), exponent);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

Rational rational_from_double(double x, unsigned denominator_bits) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite value");
  Real scaled = Real(x) * boost::multiprecision::pow(Real(2), denominator_bits);
  Integer num;
  mpfr_get_z(num.get_mpz_t(), scaled.backend().data(), MPFR_RNDN);
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), denominator_bits);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str(10);
}

std::string to_string(const Integer& value) { return value.get_str(10); }

Real to_real(const Rational& value) {
  Real r;
  mpfr_set_q(r.backend().data(), value.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real to_real(const Integer& value) {
  Real r;
  mpfr_set_z(r.backend().data(), value.get_mpz_t(), MPFR_RNDN);
  return r;
}

std::string format_real(const Real& value, int significant_digits) {
  if (boost::multiprecision::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (boost::multiprecision::isnan(value)) return "nan";
  std::ostringstream os;
  os << std::scientific << std::setprecision(significant_digits - 1) << value;
  return os.str();
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorCode::OutOfDomain, "zero to a negative power");
    Rational inv = 1 / base;
    return rational_pow(inv, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool exact_root(const Rational& value, unsigned n, Rational& root) {
  if (n == 0) return false;
  if (value < 0 && n % 2 == 0) return false;
  Rational v = value;
  v.canonicalize();
  Integer num, den;
  bool negative = v < 0;
  Integer a = abs(v.get_num());
  if (!mpz_root(num.get_mpz_t(), a.get_mpz_t(), n)) return false;
  if (!mpz_root(den.get_mpz_t(), v.get_den_mpz_t(), n)) return false;
  root = Rational(negative ? Integer(-num) : num, den);
  root.canonicalize();
  return true;
}

bool exact_sqrt(const Rational& value, Rational& root) { return exact_root(value, 2, root); }

Real real_infinity() { return std::numeric_limits<Real>::infinity(); }

}  // namespace qk
