#include "qk/khintchine.hpp"

#include "qk/chebyshev.hpp"
#include "qk/error.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <tuple>
#include <vector>

namespace qk {

namespace mp = boost::multiprecision;

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Converged: return "converged";
    case Verdict::Divergent: return "divergent";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

void require_p(const Rational& p) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "K_p needs p >= 2, got p = " + to_string(p));
}

struct Exponents {
  Real chi;    // 2 - 4/p
  Real ratio;  // 2/p
};

Exponents exponents_for(const Rational& p) {
  return {to_real(Rational(2) - Rational(4) / p), to_real(Rational(2) / p)};
}

// chi^{2-4/p} (n/d)^{2/p} through logarithms; chi, n, d >= 1.
Real term(const Exponents& e, const Real& log_chi, const Real& log_n, const Real& log_d) {
  return mp::exp(e.chi * log_chi + e.ratio * (log_n - log_d));
}

Real log_of(const Integer& v) { return mp::log(to_real(v)); }
Real log_of(const Rational& v) { return mp::log(to_real(v)); }

Real dj_level_sum(const DrinfeldJimbo& dj, const Exponents& e, const Real& q, std::int64_t k,
                  const std::vector<IrrLabel>& labels) {
  (void)k;
  Real sum = 0;
  for (const auto& mu : labels) {
    const Integer n = weyl_dimension(*dj.roots, mu);
    const Real log_n = log_of(n);
    const Real log_d = mp::log(quantum_dimension_product(*dj.roots, mu, q));
    sum += term(e, log_n, log_n, log_d);
  }
  return sum;
}

// Exact (n_k, d_k) of an N0-graded model, extended on demand.
class GradedDimensions {
 public:
  explicit GradedDimensions(const QuantumGroupModel& model) : model_(model) {}

  void extend(std::int64_t kmax) {
    if (kmax < static_cast<std::int64_t>(n_.size())) return;
    auto dims = graded_dimensions(model_, static_cast<unsigned>(std::max<std::int64_t>(kmax, 2 * n_.size())));
    n_.clear();
    d_.clear();
    for (auto& [n, d] : dims) {
      n_.push_back(std::move(n));
      d_.push_back(std::move(d));
    }
  }

  const Integer& n(std::int64_t k) const { return n_[k]; }
  const Rational& d(std::int64_t k) const { return d_[k]; }

 private:
  const QuantumGroupModel& model_;
  std::vector<Integer> n_;
  std::vector<Rational> d_;
};

Integer chi_sup_of(const QuantumGroupModel& model, std::int64_t k) {
  return model.free_orthogonal() ? Integer(k + 1) : Integer(2 * k + 1);
}

// a(k) = scale * prod_j (a_j + b_j k)^{e_j} * rho^k
struct TailShape {
  Real log_scale = 0;
  std::vector<std::tuple<Real, Real, Real>> factors;
  Real rho;

  Real log_value(std::int64_t k) const {
    Real v = log_scale + Real(k) * mp::log(rho);
    for (const auto& [a, b, ex] : factors) v += ex * mp::log(a + b * Real(k));
    return v;
  }
};

Real shape_tail(const TailShape& shape, std::int64_t L) {
  const std::int64_t k = L + 1;
  const Real first = shape.log_value(k);
  const Real ratio = mp::exp(shape.log_value(k + 1) - first);
  if (!(ratio < 1)) return real_infinity();
  // Every factor ratio is non-increasing in k, so the tail is dominated by a
  // geometric series with ratio `ratio` starting at a(L+1).
  const Real bound = mp::exp(first) / (1 - ratio);
  return bound * (1 + 1024 * std::numeric_limits<Real>::epsilon());
}

// n/d <= K * poly * r^{index+1} for index >= first_index, where n, d are
// Chebyshev values f_index(t_n), f_index(t_d) with t_d > 2 and t_n >= 2.
struct RatioEnvelope {
  Real log_k;
  Real r;
  bool polynomial_numerator;  // t_n = 2, n = index + 1
};

RatioEnvelope chebyshev_ratio_envelope(const Real& t_n, const Real& t_d, std::int64_t first_index) {
  const Real u_d = growth_base(t_d);
  const Real gap_d = u_d - 1 / u_d;
  const Real lower_factor = 1 - mp::pow(u_d, static_cast<long>(-2 * (first_index + 1)));
  RatioEnvelope env;
  if (t_n == 2) {
    env.polynomial_numerator = true;
    env.log_k = mp::log(gap_d / lower_factor);
    env.r = 1 / u_d;
  } else {
    const Real u_n = growth_base(t_n);
    const Real gap_n = u_n - 1 / u_n;
    env.polynomial_numerator = false;
    env.log_k = mp::log(gap_d / (gap_n * lower_factor));
    env.r = u_n / u_d;
  }
  return env;
}

}  // namespace

Real level_sum(const QuantumGroupModel& model, const Rational& p, std::int64_t k) {
  require_p(p);
  const Exponents e = exponents_for(p);
  if (const auto* dj = model.drinfeld_jimbo()) return dj_level_sum(*dj, e, to_real(dj->q), k, enumerate_level(model, k));
  const IrrData data = irr_data(model, IrrLabel{k});
  return term(e, log_of(data.chi_sup), log_of(data.n), log_of(data.d));
}

Real certified_tail(const QuantumGroupModel& model, const Rational& p, std::int64_t L) {
  require_p(p);
  if (L < 0) throw Error(ErrorCode::InvalidArgument, "tail index must be >= 0");
  if (is_kac(model)) {
    throw Error(ErrorCode::Divergent,
                "model " + model.spec() + " is of Kac type: n = d for every irreducible, every term is >= 1");
  }
  const Exponents e = exponents_for(p);
  TailShape shape;

  if (const auto* dj = model.drinfeld_jimbo()) {
    const auto& rs = *dj->roots;
    // Number of dominant weights of length k is at most (k+1)^{rank-1}.
    shape.factors.emplace_back(Real(1), Real(1), Real(rs.rank - 1));
    // n_mu <= prod_beta (1 + C_beta |mu|), C_beta = max_i (omega_i,beta)/(rho,beta);
    // the term is n^{2-2/p} d^{-2/p} since chi = n.
    const Real n_exponent = e.chi + e.ratio;
    for (std::size_t b = 0; b < rs.positive_roots.size(); ++b) {
      const auto c = *std::max_element(rs.root_pairing[b].begin(), rs.root_pairing[b].end());
      shape.factors.emplace_back(Real(1), to_real(Rational(static_cast<long>(c), static_cast<long>(rs.rho_pairing[b]))),
                                 n_exponent);
    }
    // d_mu >= ||Q_mu||_inf >= t^{-|mu|}, t = max_i t_i.
    auto t = t_constants(rs, dj->q);
    shape.rho = mp::pow(to_real(*std::max_element(t.begin(), t.end())), e.ratio);
    return shape_tail(shape, L);
  }

  // N0-graded: chi_k = step k + 1 with step 1 (SU2) or 2 (SO3); n/d from
  // Chebyshev envelopes at index step*k (+0), valid from index step*(L+1).
  const bool so3 = model.quantum_automorphism() != nullptr;
  const std::int64_t step = so3 ? 2 : 1;
  Real t_n, t_d;
  if (const auto* fo = model.free_orthogonal()) {
    t_n = Real(fo->n);
    t_d = to_real(fo->nq);
  } else {
    const auto* qa = model.quantum_automorphism();
    t_n = mp::sqrt(to_real(qa->classical_argument()));
    t_d = mp::sqrt(to_real(qa->quantum_argument()));
    if (qa->dim_b == 4) t_n = 2;
  }
  const RatioEnvelope env = chebyshev_ratio_envelope(t_n, t_d, step * (L + 1));
  // index + 1 = step k + 1, so
  // term <= (step k + 1)^{e.chi + e.ratio*m} K^{e.ratio} r^{e.ratio (step k + 1)}.
  const Real m = env.polynomial_numerator ? Real(1) : Real(0);
  shape.log_scale = e.ratio * (env.log_k + mp::log(env.r));
  shape.factors.emplace_back(Real(1), Real(step), e.chi + e.ratio * m);
  shape.rho = mp::pow(env.r, e.ratio * step);
  return shape_tail(shape, L);
}

KpReport kp_constant(const QuantumGroupModel& model, const Rational& p, const Real& tol, std::int64_t max_length,
                     const KpOptions& options) {
  require_p(p);
  if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (max_length < 0) throw Error(ErrorCode::InvalidArgument, "max_length must be >= 0");
  PrecisionScope precision(options.precision_bits);

  KpReport report;
  report.p = p;
  report.precision_bits = options.precision_bits;
  report.partial_sum = 0;
  report.tail_bound = real_infinity();
  report.kp_upper = real_infinity();

  const Exponents e = exponents_for(p);
  const bool kac = is_kac(model);
  const std::int64_t limit = kac ? std::min<std::int64_t>(max_length, 8) : max_length;
  const unsigned threads = std::max(1u, options.threads);
  constexpr std::int64_t kBatch = 32;

  GradedDimensions graded(model);
  const auto* dj = model.drinfeld_jimbo();
  const Real q = dj ? to_real(dj->q) : Real(0);

  bool done = false;
  for (std::int64_t start = 0; start <= limit && !done; start += kBatch) {
    const std::int64_t stop = std::min(limit, start + kBatch - 1);
    const auto count = static_cast<std::size_t>(stop - start + 1);
    if (!dj) graded.extend(stop);

    std::vector<Real> sums(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < count; i = next++) {
        const std::int64_t k = start + static_cast<std::int64_t>(i);
        if (dj) {
          sums[i] = dj_level_sum(*dj, e, q, k, enumerate_level(model, k));
        } else {
          sums[i] = term(e, log_of(chi_sup_of(model, k)), log_of(graded.n(k)), log_of(graded.d(k)));
        }
      }
    };
    if (threads == 1 || count == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }

    // Fixed ascending-length reduction.
    for (std::size_t i = 0; i < count; ++i) {
      const std::int64_t k = start + static_cast<std::int64_t>(i);
      report.partial_sum += sums[i];
      report.terms_summed = k;
      if (kac) continue;
      Real tail = certified_tail(model, p, k);
      if (tail < tol) {
        report.tail_bound = tail;
        done = true;
        break;
      }
      report.tail_bound = tail;
    }
  }

  report.kp_lower = mp::sqrt(report.partial_sum);
  if (kac) {
    report.verdict = Verdict::Divergent;
    report.tail_bound = real_infinity();
    report.divergence_witness =
        "n_k = d_k for every irreducible, so every term equals ||chi||_inf^{2-4/p} >= 1 and the series diverges";
  } else if (done) {
    report.verdict = Verdict::Converged;
    report.kp_upper = mp::sqrt(report.partial_sum + report.tail_bound);
  } else {
    report.verdict = Verdict::Inconclusive;
  }
  return report;
}

namespace {

// Closed-form decay base of n/d per unit length.
Real theoretical_base(const QuantumGroupModel& model) {
  if (is_kac(model)) return 1;
  if (const auto* dj = model.drinfeld_jimbo()) {
    auto t = t_constants(*dj->roots, dj->q);
    return to_real(*std::max_element(t.begin(), t.end()));
  }
  if (const auto* fo = model.free_orthogonal()) {
    return growth_base(Real(fo->n)) / growth_base(to_real(fo->nq));
  }
  // (x - 2 + sqrt(x(x-4)))/2 = growth_base(sqrt x)^2.
  const auto* qa = model.quantum_automorphism();
  auto sq_base = [](const Rational& x) -> Real {
    const Real xr = to_real(x);
    return (xr - 2 + mp::sqrt(xr * (xr - 4))) / 2;
  };
  return sq_base(qa->classical_argument()) / sq_base(qa->quantum_argument());
}

}  // namespace

DecayReport decay_rate(const QuantumGroupModel& model, unsigned horizon) {
  if (horizon == 0) throw Error(ErrorCode::InvalidArgument, "decay horizon must be >= 1");
  DecayReport report;
  report.horizon = horizon;
  report.theoretical_base = theoretical_base(model);

  std::vector<Real> ratios;  // max n/d per level
  if (const auto* dj = model.drinfeld_jimbo()) {
    const Real q = to_real(dj->q);
    for (unsigned k = 0; k <= horizon; ++k) {
      Real best = 0;
      for (const auto& mu : enumerate_level(model, k)) {
        Real r = to_real(weyl_dimension(*dj->roots, mu)) / quantum_dimension_product(*dj->roots, mu, q);
        best = mp::max(best, r);
      }
      ratios.push_back(best);
    }
  } else {
    for (const auto& [n, d] : graded_dimensions(model, horizon)) ratios.push_back(to_real(Rational(n) / d));
  }

  report.empirical_base = mp::pow(ratios[horizon], Real(1) / Real(horizon));
  report.constant_envelope = 0;
  for (unsigned k = 0; k <= horizon; ++k) {
    report.constant_envelope =
        mp::max(report.constant_envelope, ratios[k] / mp::pow(report.theoretical_base, static_cast<long>(k)));
  }
  return report;
}

CorollaryExponents corollary_exponents(const Rational& p, const Rational& r) {
  bool dyadic = p.get_den() == 1 && p >= 4 && mpz_popcount(p.get_num_mpz_t()) == 1;
  if (!dyadic) throw Error(ErrorCode::InvalidArgument, "equivalence constants need p = 2^k >= 4, got " + to_string(p));
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "equivalence constants need r >= 1, got " + to_string(r));
  CorollaryExponents out;
  out.to_l2 = p / (p - 2);
  out.to_lp = (2 * p - 2) / (p - 2);
  out.to_lr = 2 * p * (r - 1) / (r * (p - 2));
  out.to_l2.canonicalize();
  out.to_lp.canonicalize();
  out.to_lr.canonicalize();
  return out;
}

CorollaryConstants corollary_constants(const KpReport& kp, const Rational& r) {
  if (kp.verdict == Verdict::Divergent) throw Error(ErrorCode::Divergent, "K_p is infinite for this model");
  if (kp.verdict == Verdict::Inconclusive) throw Error(ErrorCode::Inconclusive, "K_p was not certified finite");
  CorollaryConstants out;
  out.p = kp.p;
  out.r = r;
  out.exponents = corollary_exponents(kp.p, r);
  out.c_2_1 = mp::pow(kp.kp_upper, to_real(out.exponents.to_l2));
  out.c_p_1 = mp::pow(kp.kp_upper, to_real(out.exponents.to_lp));
  out.c_r_1 = mp::pow(kp.kp_upper, to_real(out.exponents.to_lr));
  return out;
}

}  // namespace qk
