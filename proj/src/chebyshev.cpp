#include "qk/chebyshev.hpp"

#include "qk/error.hpp"

#include <limits>

namespace qk {

namespace {

void require_f_domain(bool ok) {
  if (!ok) throw Error(ErrorCode::OutOfDomain, "Chebyshev f_k needs t >= 2");
}

void require_g_domain(bool ok) {
  if (!ok) throw Error(ErrorCode::OutOfDomain, "g_k needs x >= 4");
}

template <class T>
T f_recursion(unsigned k, const T& t) {
  T prev = 1, cur = t;
  if (k == 0) return prev;
  for (unsigned i = 1; i < k; ++i) {
    T next = t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

template <class T>
T g_recursion(unsigned k, const T& x) {
  T prev = 1, cur = x - 1;
  if (k == 0) return prev;
  const T shift = x - 2;
  for (unsigned i = 1; i < k; ++i) {
    T next = shift * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Rational chebyshev_f(unsigned k, const Rational& t) {
  require_f_domain(t >= 2);
  return f_recursion<Rational>(k, t);
}

Real chebyshev_f(unsigned k, const Real& t) {
  require_f_domain(t >= 2);
  return f_recursion<Real>(k, t);
}

std::vector<Rational> chebyshev_f_sequence(unsigned kmax, const Rational& t) {
  require_f_domain(t >= 2);
  std::vector<Rational> out{Rational(1)};
  if (kmax >= 1) out.push_back(t);
  for (unsigned k = 2; k <= kmax; ++k) out.push_back(t * out[k - 1] - out[k - 2]);
  return out;
}

Real growth_base(const Real& t) {
  require_f_domain(t >= 2);
  return (t + boost::multiprecision::sqrt(t * t - 4)) / 2;
}

Real chebyshev_f_closed(unsigned k, const Real& t) {
  if (!(t > 2)) throw Error(ErrorCode::OutOfDomain, "closed form needs t > 2");
  const Real s = boost::multiprecision::sqrt(t * t - 4);
  const Real plus = boost::multiprecision::pow((t + s) / 2, k + 1);
  const Real minus = boost::multiprecision::pow((t - s) / 2, k + 1);
  return (plus - minus) / s;
}

Rational chebyshev_g(unsigned k, const Rational& x) {
  require_g_domain(x >= 4);
  return g_recursion<Rational>(k, x);
}

Real chebyshev_g(unsigned k, const Real& x) {
  require_g_domain(x >= 4);
  return g_recursion<Real>(k, x);
}

std::vector<Rational> chebyshev_g_sequence(unsigned kmax, const Rational& x) {
  require_g_domain(x >= 4);
  std::vector<Rational> out{Rational(1)};
  if (kmax >= 1) out.push_back(x - 1);
  const Rational shift = x - 2;
  for (unsigned k = 2; k <= kmax; ++k) out.push_back(shift * out[k - 1] - out[k - 2]);
  return out;
}

ChebEnvelope envelope(unsigned k, const Real& t) {
  if (!(t > 2)) throw Error(ErrorCode::OutOfDomain, "envelope needs t > 2");
  ChebEnvelope e;
  e.base_u = growth_base(t);
  const Real gap = e.base_u - 1 / e.base_u;
  const Real power = boost::multiprecision::pow(e.base_u, k + 1);
  // Rounding in u and in u^{k+1} grows linearly with k (as does the effect of
  // a rounded t), so the margin does too.
  const Real slack = (8 * (static_cast<double>(k) + 1) + 64) * std::numeric_limits<Real>::epsilon();
  e.upper = power / gap * (1 + slack);
  e.lower = power * (1 - 1 / (power * power)) / gap * (1 - slack);
  return e;
}

}  // namespace qk
