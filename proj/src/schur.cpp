#include "qk/schur.hpp"

#include "qk/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>
#include <limits>

namespace qk {

namespace {

const std::vector<Rational>& diagonal_of(const QData& q, const IrrLabel& label,
                                         std::map<IrrLabel, std::vector<Rational>>& cache) {
  if (auto it = cache.find(label); it != cache.end()) return it->second;
  auto it = q.find(label);
  if (it == q.end()) throw Error(ErrorCode::MissingQData, "no modular matrix for label " + label.str());
  return cache.emplace(label, it->second.diagonal()).first->second;
}

const QSpectrum& checked_spectrum(const QData& q, const BasisIndex& b) {
  auto it = q.find(b.label);
  if (it == q.end()) throw Error(ErrorCode::MissingQData, "no modular matrix for label " + b.label.str());
  const auto n = it->second.size();
  if (b.i < 0 || b.j < 0 || b.i >= n || b.j >= n)
    throw Error(ErrorCode::InvalidLabel, "matrix coefficient index out of range for " + b.label.str());
  return it->second;
}

// Diagonal entry i of the expanded spectrum, without expanding it.
const Rational& entry_at(const QSpectrum& q, std::int64_t i) {
  for (const auto& [value, mult] : q.entries) {
    if (i < mult) return value;
    i -= mult;
  }
  throw Error(ErrorCode::InvalidLabel, "diagonal index out of range");
}

// x^e for positive rational x and rational e, when the result is rational.
Rational exact_power(const Rational& x, const Rational& e) {
  Rational ec = e;
  ec.canonicalize();
  if (!ec.get_den().fits_ulong_p() || !ec.get_num().fits_slong_p())
    throw Error(ErrorCode::NotExact, "exponent too large for exact evaluation");
  Rational root;
  if (!exact_root(x, static_cast<unsigned>(ec.get_den().get_ui()), root))
    throw Error(ErrorCode::NotExact, "(" + to_string(x) + ")^(" + to_string(ec) + ") is irrational");
  return rational_pow(root, ec.get_num().get_si());
}

}  // namespace

Rational haar_adjoint_left(const QData& q, const BasisIndex& a, const BasisIndex& b) {
  const auto& qa = checked_spectrum(q, a);
  checked_spectrum(q, b);
  if (a.label != b.label || a.i != b.i || a.j != b.j) return 0;
  return 1 / (entry_at(qa, a.i) * qa.trace());
}

Rational haar_adjoint_right(const QData& q, const BasisIndex& a, const BasisIndex& b) {
  const auto& qa = checked_spectrum(q, a);
  checked_spectrum(q, b);
  if (a.label != b.label || a.i != b.i || a.j != b.j) return 0;
  return entry_at(qa, a.j) / qa.trace();
}

ExactCoefficientVector character(const QData& q, const IrrLabel& label) {
  auto it = q.find(label);
  if (it == q.end()) throw Error(ErrorCode::MissingQData, "no modular matrix for label " + label.str());
  ExactCoefficientVector v;
  const auto n = it->second.size();
  for (int i = 0; i < n; ++i) v.entries[{label, i, i}] = ExactCoefficient{Rational(1), Rational(0)};
  return v;
}

ExactCoefficientVector sigma_imaginary(const ExactCoefficientVector& v, const Rational& s, const QData& q) {
  ExactCoefficientVector out = v;
  for (auto& [index, c] : out.entries) {
    checked_spectrum(q, index);
    c.power += s;
  }
  return out;
}

CoefficientVector sigma_apply(const CoefficientVector& v, std::complex<double> z, const QData& q) {
  CoefficientVector out = v;
  std::map<IrrLabel, std::vector<Rational>> cache;
  const std::complex<double> iz = std::complex<double>(0, 1) * z;
  for (auto& [index, c] : out.entries) {
    checked_spectrum(q, index);
    const auto& diag = diagonal_of(q, index.label, cache);
    const double log_sum = std::log(diag[index.i].get_d()) + std::log(diag[index.j].get_d());
    c *= std::exp(iz * log_sum);
  }
  return out;
}

Rational l2_norm_squared(const ExactCoefficientVector& v, const QData& q) {
  std::map<IrrLabel, std::vector<Rational>> cache;
  Rational total = 0;
  for (const auto& [a, ca] : v.entries) {
    for (const auto& [b, cb] : v.entries) {
      const Rational pairing = haar_adjoint_left(q, a, b);
      if (pairing == 0) continue;
      // a == b here, so conj(c_a) c_b = |c_a|^2.
      const auto& diag = diagonal_of(q, a.label, cache);
      const Rational modulus = ca.scale * cb.scale * exact_power(diag[a.i] * diag[a.j], ca.power + cb.power);
      total += modulus * pairing;
    }
  }
  return total;
}

double l2_norm_squared(const CoefficientVector& v, const QData& q) {
  double total = 0;
  for (const auto& [a, ca] : v.entries) {
    for (const auto& [b, cb] : v.entries) {
      const Rational pairing = haar_adjoint_left(q, a, b);
      if (pairing == 0) continue;
      total += (std::conj(ca) * cb).real() * pairing.get_d();
    }
  }
  return total;
}

LemmaBaseCheck lemma_base_check(const QSpectrum& q) {
  if (q.entries.empty()) throw Error(ErrorCode::InvalidArgument, "empty spectrum");
  if (!q.trace_symmetric()) throw Error(ErrorCode::NotTraceSymmetric, "spectrum violates Tr(Q) = Tr(Q^-1)");
  const IrrLabel label{0};
  const QData data{{label, q}};
  LemmaBaseCheck out;
  out.lhs = l2_norm_squared(sigma_imaginary(character(data, label), Rational(1, 4), data), data);
  out.rhs = Rational(static_cast<long>(q.size())) / q.trace();
  out.equal = out.lhs == out.rhs;
  return out;
}

bool modular_duality_check(const QSpectrum& q) {
  if (q.entries.empty()) throw Error(ErrorCode::InvalidArgument, "empty spectrum");
  if (!q.trace_symmetric()) throw Error(ErrorCode::NotTraceSymmetric, "spectrum violates Tr(Q) = Tr(Q^-1)");
  const IrrLabel label{0};
  const QData data{{label, q}};
  const auto diag = q.diagonal();
  const int n = static_cast<int>(diag.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const BasisIndex f{label, i, j};
      ExactCoefficientVector fv;
      fv.entries[f] = ExactCoefficient{Rational(1), Rational(0)};
      // sigma_{-i}(u_ij) = (Q_ii Q_jj) u_ij
      const auto shifted = sigma_imaginary(fv, Rational(1), data);
      const auto& c = shifted.entries.at(f);
      const Rational multiplier = c.scale * exact_power(diag[i] * diag[j], c.power);
      for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
          const BasisIndex g{label, s, t};
          const Rational lhs = haar_adjoint_right(data, f, g);            // h(u_ij u_st^*)
          const Rational rhs = multiplier * haar_adjoint_left(data, g, f);  // h(u_st^* sigma_{-i}(u_ij))
          if (lhs != rhs) return false;
        }
      }
    }
  }
  return true;
}

double l2_norm_squared(const CentralSeries& f) {
  double total = 0;
  for (const auto& [a, xa] : f.terms) {
    const int na = static_cast<int>(f.spectra.count(a) ? f.spectra.at(a).size() : 0);
    if (!f.spectra.count(a)) throw Error(ErrorCode::MissingQData, "no modular matrix for label " + a.str());
    for (const auto& [b, xb] : f.terms) {
      const int nb = static_cast<int>(f.spectra.at(b).size());
      const double trace = (xa.adjoint() * xb).trace().real();
      if (trace == 0) continue;
      for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
          total += trace * haar_adjoint_left(f.spectra, {a, i, i}, {b, j, j}).get_d();
    }
  }
  return total;
}

TheoremP2Check theorem_p2_check(const CentralSeries& f, double k2) {
  if (!std::isfinite(k2)) throw Error(ErrorCode::Divergent, "K_2 is infinite; no bound to check");
  for (const auto& [label, x] : f.terms) {
    if (x.rows() != f.n || x.cols() != f.n)
      throw Error(ErrorCode::DimensionMismatch, "coefficient of " + label.str() + " is not n x n");
  }
  TheoremP2Check out;
  out.lhs = std::sqrt(std::max(0.0, l2_norm_squared(f)));

  ComplexMatrix gram = ComplexMatrix::Zero(f.n, f.n);
  for (const auto& [label, x] : f.terms) gram += x.adjoint() * x;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(gram);
  Eigen::VectorXd roots = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  ComplexMatrix root = eig.eigenvectors() * roots.asDiagonal() * eig.eigenvectors().adjoint();
  out.square_function = root.norm();
  out.rhs_bound = k2 * out.square_function;
  out.holds = out.lhs <= out.rhs_bound * (1 + 1e-12) + 1e-300;
  return out;
}

std::vector<double> trace_symmetrize(std::vector<double> diagonal) {
  double tr = 0, inv = 0;
  for (double v : diagonal) {
    if (!(v > 0)) throw Error(ErrorCode::InvalidArgument, "modular matrix entries must be positive");
    tr += v;
    inv += 1 / v;
  }
  const double s = std::sqrt(inv / tr);
  for (double& v : diagonal) v *= s;
  return diagonal;
}

namespace {

Rational random_positive(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 9), den(1, 9);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

// Positive rational triples with g(x) + g(y) + g(z) = 0, g(x) = x - 1/x,
// that contain no reciprocal pair and no 1. They are the non-palindromic
// building blocks of exact trace-symmetric spectra; found by solving
// z - 1/z = m, which is rational exactly when m^2 + 4 is a square.
const std::vector<std::array<Rational, 3>>& seed_triples() {
  static const std::vector<std::array<Rational, 3>> table = [] {
    std::vector<Rational> grid;
    for (long a = 1; a <= 20; ++a)
      for (long b = 1; b <= 20; ++b)
        if (std::gcd(a, b) == 1) grid.emplace_back(a, b);
    std::sort(grid.begin(), grid.end());
    std::set<std::array<Rational, 3>> found;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (std::size_t j = i; j < grid.size(); ++j) {
        const Rational& x = grid[i];
        const Rational& y = grid[j];
        if (x == 1 || y == 1 || x * y == 1) continue;
        const Rational m = -(x - 1 / x + y - 1 / y);
        Rational w;
        if (!exact_sqrt(m * m + 4, w)) continue;
        Rational z = (m + w) / 2;
        z.canonicalize();
        if (z == 1 || x * z == 1 || y * z == 1) continue;
        std::array<Rational, 3> t{x, y, z};
        std::sort(t.begin(), t.end());
        found.insert(t);
      }
    }
    return std::vector<std::array<Rational, 3>>(found.begin(), found.end());
  }();
  return table;
}

}  // namespace

QSpectrum random_trace_symmetric_spectrum(std::mt19937_64& rng, int size) {
  if (size < 1) throw Error(ErrorCode::InvalidArgument, "spectrum size must be >= 1");
  // Blocks that are trace-symmetric on their own: seed triples (or their
  // inverses), reciprocal pairs and the entry 1.
  const auto& seeds = seed_triples();
  std::uniform_int_distribution<std::size_t> pick_seed(0, seeds.size() - 1);
  std::bernoulli_distribution coin(0.5);
  std::vector<Rational> diag;
  while (static_cast<int>(diag.size()) < size) {
    const int left = size - static_cast<int>(diag.size());
    if (left >= 3 && coin(rng)) {
      const bool invert = coin(rng);
      for (const auto& x : seeds[pick_seed(rng)]) diag.push_back(invert ? Rational(1 / x) : x);
    } else if (left >= 2 && (left != 3 || coin(rng))) {
      Rational l = random_positive(rng);
      diag.push_back(l);
      diag.push_back(1 / l);
    } else {
      diag.push_back(1);
    }
  }

  std::shuffle(diag.begin(), diag.end(), rng);
  QSpectrum q = QSpectrum::from_diagonal(diag);
  if (!q.trace_symmetric()) throw Error(ErrorCode::NotTraceSymmetric, "synthetic spectrum generator failed (internal)");
  return q;
}

}  // namespace qk
