#include "qk/rootsys.hpp"

#include "qk/error.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace qk {

bool WeightVector::dominant() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c >= 0; });
}

std::int64_t WeightVector::level() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), std::int64_t{0});
}

std::string WeightVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) os << ',';
    os << coeffs[i];
  }
  os << ')';
  return os.str();
}

std::string RootSystemData::name() const {
  return std::string(1, static_cast<char>(type)) + std::to_string(rank);
}

namespace {

void validate_type(LieType type, int rank) {
  bool ok = false;
  switch (type) {
    case LieType::A: ok = rank >= 1; break;
    case LieType::B: ok = rank >= 2; break;
    case LieType::C: ok = rank >= 3; break;
    case LieType::D: ok = rank >= 4; break;
    case LieType::E: ok = rank >= 6 && rank <= 8; break;
    case LieType::F: ok = rank == 4; break;
    case LieType::G: ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok) {
    throw Error(ErrorCode::InvalidRootSystem,
                std::string("no simple Lie type ") + static_cast<char>(type) + std::to_string(rank) +
                    " (valid: A_r r>=1, B_r r>=2, C_r r>=3, D_r r>=4, E6-E8, F4, G2)");
  }
}

// Gram matrix of the simple roots, short roots of squared length 2.
std::vector<std::vector<int>> simple_gram(LieType type, int r) {
  std::vector<std::vector<int>> g(r, std::vector<int>(r, 0));
  auto link = [&](int i, int j, int value) {  // 1-based
    g[i - 1][j - 1] = value;
    g[j - 1][i - 1] = value;
  };
  switch (type) {
    case LieType::A:
      for (int i = 1; i <= r; ++i) g[i - 1][i - 1] = 2;
      for (int i = 1; i < r; ++i) link(i, i + 1, -1);
      break;
    case LieType::B:
      for (int i = 1; i < r; ++i) g[i - 1][i - 1] = 4;
      g[r - 1][r - 1] = 2;
      for (int i = 1; i < r; ++i) link(i, i + 1, -2);
      break;
    case LieType::C:
      for (int i = 1; i < r; ++i) g[i - 1][i - 1] = 2;
      g[r - 1][r - 1] = 4;
      for (int i = 1; i < r - 1; ++i) link(i, i + 1, -1);
      link(r - 1, r, -2);
      break;
    case LieType::D:
      for (int i = 1; i <= r; ++i) g[i - 1][i - 1] = 2;
      for (int i = 1; i < r - 1; ++i) link(i, i + 1, -1);
      link(r - 2, r, -1);
      break;
    case LieType::E:
      for (int i = 1; i <= r; ++i) g[i - 1][i - 1] = 2;
      link(1, 3, -1);
      link(2, 4, -1);
      for (int i = 3; i < r; ++i) link(i, i + 1, -1);
      break;
    case LieType::F:
      g[0][0] = 4;
      g[1][1] = 4;
      g[2][2] = 2;
      g[3][3] = 2;
      link(1, 2, -2);
      link(2, 3, -2);
      link(3, 4, -1);
      break;
    case LieType::G:
      g[0][0] = 2;
      g[1][1] = 6;
      link(1, 2, -3);
      break;
  }
  return g;
}

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw Error(ErrorCode::InvalidRootSystem, "singular Gram matrix");
    std::swap(a[p], a[c]);
    Rational pivot = a[c][c];
    for (auto& x : a[c]) x /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

RootSystemData build_root_system(LieType type, int rank) {
  validate_type(type, rank);
  RootSystemData rs;
  rs.type = type;
  rs.rank = rank;
  rs.simple_root_gram = simple_gram(type, rank);
  const auto& b = rs.simple_root_gram;

  rs.cartan_matrix.assign(rank, std::vector<int>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.cartan_matrix[i][j] = 2 * b[i][j] / b[i][i];

  // Positive roots: close the simple roots under simple reflections,
  // keeping only the results that stay positive.
  std::set<std::vector<int>> found;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    found.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<int> beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      int coroot_pairing = 0;  // <beta, alpha_i^vee>
      for (int j = 0; j < rank; ++j) coroot_pairing += beta[j] * rs.cartan_matrix[i][j];
      std::vector<int> image = beta;
      image[i] -= coroot_pairing;
      if (std::any_of(image.begin(), image.end(), [](int c) { return c < 0; })) continue;
      if (std::all_of(image.begin(), image.end(), [](int c) { return c == 0; })) continue;
      if (found.insert(image).second) queue.push_back(image);
    }
  }
  rs.positive_roots.assign(found.begin(), found.end());
  std::stable_sort(rs.positive_roots.begin(), rs.positive_roots.end(),
                   [](const std::vector<int>& x, const std::vector<int>& y) {
                     return std::accumulate(x.begin(), x.end(), 0) < std::accumulate(y.begin(), y.end(), 0);
                   });

  // omega = diag(D) B^{-1} alpha with D_i = (alpha_i, alpha_i)/2, so
  // (omega_i, omega_j) = (diag(D) B^{-1} diag(D))_ij.
  auto binv = invert(b);
  rs.fundamental_weight_gram.assign(rank, std::vector<Rational>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      rs.fundamental_weight_gram[i][j] = Rational(rs.half_length(i) * rs.half_length(j)) * binv[i][j];

  rs.rho = WeightVector(std::vector<std::int64_t>(rank, 1));

  for (const auto& beta : rs.positive_roots) {
    std::vector<std::int64_t> pairing(rank);
    std::int64_t rho_pair = 0;
    std::vector<std::int64_t> wcoords(rank, 0);
    for (int i = 0; i < rank; ++i) {
      pairing[i] = static_cast<std::int64_t>(beta[i]) * rs.half_length(i);
      rho_pair += pairing[i];
      for (int j = 0; j < rank; ++j) wcoords[i] += static_cast<std::int64_t>(beta[j]) * rs.cartan_matrix[i][j];
    }
    rs.root_pairing.push_back(std::move(pairing));
    rs.rho_pairing.push_back(rho_pair);
    rs.positive_roots_weight_basis.emplace_back(std::move(wcoords));
  }
  return rs;
}

RootSystemData build_root_system(std::string_view name) {
  if (name.size() < 2) throw Error(ErrorCode::InvalidRootSystem, "bad Lie type '" + std::string(name) + "'");
  char t = name.front();
  if (t >= 'a' && t <= 'g') t = static_cast<char>(t - 'a' + 'A');
  if (t < 'A' || t > 'G') throw Error(ErrorCode::InvalidRootSystem, "bad Lie type '" + std::string(name) + "'");
  std::string_view digits = name.substr(1);
  if (digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorCode::InvalidRootSystem, "bad rank in '" + std::string(name) + "'");
  }
  return build_root_system(static_cast<LieType>(t), std::stoi(std::string(digits)));
}

std::shared_ptr<const RootSystemData> shared_root_system(LieType type, int rank) {
  static std::mutex mutex;
  static std::map<std::pair<char, int>, std::shared_ptr<const RootSystemData>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(static_cast<char>(type), rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto data = std::make_shared<const RootSystemData>(build_root_system(type, rank));
  cache.emplace(key, data);
  return data;
}

namespace {

void require_rank(const RootSystemData& rs, std::size_t n) {
  if (n != static_cast<std::size_t>(rs.rank)) {
    throw Error(ErrorCode::DimensionMismatch, "weight has " + std::to_string(n) + " coordinates, " + rs.name() +
                                                  " needs " + std::to_string(rs.rank));
  }
}

void require_dominant(const RootSystemData& rs, const WeightVector& mu) {
  require_rank(rs, mu.size());
  if (!mu.dominant()) throw Error(ErrorCode::NotDominant, "weight " + mu.str() + " is not dominant");
}

}  // namespace

Rational inner_product(const RootSystemData& rs, std::span<const Rational> v, std::span<const Rational> w) {
  require_rank(rs, v.size());
  require_rank(rs, w.size());
  Rational sum = 0;
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) sum += v[i] * rs.fundamental_weight_gram[i][j] * w[j];
  return sum;
}

Rational inner_product(const RootSystemData& rs, const WeightVector& v, const WeightVector& w) {
  std::vector<Rational> a(v.size()), b(w.size());
  for (std::size_t i = 0; i < v.size(); ++i) a[i] = Rational(static_cast<long>(v.coeffs[i]));
  for (std::size_t i = 0; i < w.size(); ++i) b[i] = Rational(static_cast<long>(w.coeffs[i]));
  return inner_product(rs, a, b);
}

std::vector<std::int64_t> root_pairings(const RootSystemData& rs, const WeightVector& mu) {
  require_rank(rs, mu.size());
  std::vector<std::int64_t> out(rs.positive_roots.size(), 0);
  for (std::size_t b = 0; b < out.size(); ++b)
    for (int i = 0; i < rs.rank; ++i) out[b] += mu.coeffs[i] * rs.root_pairing[b][i];
  return out;
}

Integer weyl_dimension(const RootSystemData& rs, const WeightVector& mu) {
  require_dominant(rs, mu);
  auto pairing = root_pairings(rs, mu);
  Integer num = 1, den = 1;
  for (std::size_t b = 0; b < pairing.size(); ++b) {
    num *= static_cast<long>(pairing[b] + rs.rho_pairing[b]);
    den *= static_cast<long>(rs.rho_pairing[b]);
  }
  return num / den;
}

namespace {

void reflect(const RootSystemData& rs, std::vector<std::int64_t>& lambda, int i) {
  const std::int64_t c = lambda[i];
  for (int k = 0; k < rs.rank; ++k) lambda[k] -= c * rs.cartan_matrix[k][i];
}

}  // namespace

WeightVector dominant_representative(const RootSystemData& rs, WeightVector lambda) {
  require_rank(rs, lambda.size());
  for (;;) {
    int i = 0;
    while (i < rs.rank && lambda.coeffs[i] >= 0) ++i;
    if (i == rs.rank) return lambda;
    reflect(rs, lambda.coeffs, i);
  }
}

std::vector<WeightVector> weyl_orbit(const RootSystemData& rs, const WeightVector& lambda) {
  require_rank(rs, lambda.size());
  std::set<WeightVector> seen{lambda};
  std::deque<WeightVector> queue{lambda};
  while (!queue.empty()) {
    WeightVector w = queue.front();
    queue.pop_front();
    for (int i = 0; i < rs.rank; ++i) {
      if (w.coeffs[i] == 0) continue;
      WeightVector image = w;
      reflect(rs, image.coeffs, i);
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

std::map<WeightVector, Integer> freudenthal(const RootSystemData& rs, const WeightVector& mu) {
  // Dominant weights below mu, reached by subtracting positive roots
  // (dominant weights below a dominant weight are connected by such steps).
  std::map<WeightVector, std::int64_t> depth{{mu, 0}};
  std::deque<WeightVector> queue{mu};
  while (!queue.empty()) {
    WeightVector w = queue.front();
    queue.pop_front();
    const std::int64_t h = depth[w];
    for (std::size_t b = 0; b < rs.positive_roots.size(); ++b) {
      WeightVector next = w;
      for (int i = 0; i < rs.rank; ++i) next.coeffs[i] -= rs.positive_roots_weight_basis[b].coeffs[i];
      if (!next.dominant() || depth.count(next)) continue;
      std::int64_t height = 0;
      for (int c : rs.positive_roots[b]) height += c;
      depth.emplace(next, h + height);
      queue.push_back(std::move(next));
    }
  }

  std::vector<std::pair<std::int64_t, WeightVector>> order;
  for (const auto& [w, h] : depth) order.emplace_back(h, w);
  std::sort(order.begin(), order.end());

  WeightVector mu_rho = mu;
  for (auto& c : mu_rho.coeffs) c += 1;
  const Rational top = inner_product(rs, mu_rho, mu_rho);

  std::vector<std::int64_t> root_norm(rs.positive_roots.size(), 0);
  for (std::size_t b = 0; b < root_norm.size(); ++b)
    for (int i = 0; i < rs.rank; ++i)
      root_norm[b] += rs.positive_roots_weight_basis[b].coeffs[i] * rs.root_pairing[b][i];

  std::map<WeightVector, Integer> dominant_mult;
  dominant_mult[mu] = 1;
  for (std::size_t idx = 1; idx < order.size(); ++idx) {
    const WeightVector& lambda = order[idx].second;
    auto lambda_pair = root_pairings(rs, lambda);
    Rational numerator = 0;
    for (std::size_t b = 0; b < rs.positive_roots.size(); ++b) {
      WeightVector shifted = lambda;
      for (std::int64_t k = 1;; ++k) {
        for (int i = 0; i < rs.rank; ++i) shifted.coeffs[i] += rs.positive_roots_weight_basis[b].coeffs[i];
        auto it = dominant_mult.find(dominant_representative(rs, shifted));
        if (it == dominant_mult.end()) break;
        const std::int64_t pair = lambda_pair[b] + k * root_norm[b];
        numerator += Rational(it->second) * Rational(static_cast<long>(pair));
      }
    }
    WeightVector lambda_rho = lambda;
    for (auto& c : lambda_rho.coeffs) c += 1;
    Rational denominator = top - inner_product(rs, lambda_rho, lambda_rho);
    Rational m = 2 * numerator / denominator;
    if (m.get_den() != 1) throw Error(ErrorCode::InvalidRootSystem, "non-integral multiplicity (internal error)");
    if (m != 0) dominant_mult[lambda] = m.get_num();
  }

  std::map<WeightVector, Integer> all;
  for (const auto& [w, m] : dominant_mult)
    for (auto& image : weyl_orbit(rs, w)) all.emplace(std::move(image), m);
  return all;
}

}  // namespace

std::map<WeightVector, Integer> weight_multiplicities(const RootSystemData& rs, const WeightVector& mu) {
  require_dominant(rs, mu);
  using Key = std::pair<std::string, WeightVector>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const std::map<WeightVector, Integer>>> cache;
  Key key{rs.name(), mu};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto result = std::make_shared<const std::map<WeightVector, Integer>>(freudenthal(rs, mu));
  std::lock_guard lock(mutex);
  cache.emplace(key, result);
  return *result;
}

std::int64_t QSpectrum::size() const {
  std::int64_t n = 0;
  for (const auto& e : entries) n += e.second;
  return n;
}

Rational QSpectrum::trace() const {
  Rational s = 0;
  for (const auto& [value, mult] : entries) s += value * Rational(static_cast<long>(mult));
  return s;
}

Rational QSpectrum::inverse_trace() const {
  Rational s = 0;
  for (const auto& [value, mult] : entries) s += Rational(static_cast<long>(mult)) / value;
  return s;
}

bool QSpectrum::trace_symmetric() const { return trace() == inverse_trace(); }

Rational QSpectrum::max_eigenvalue() const {
  if (entries.empty()) throw Error(ErrorCode::InvalidArgument, "empty spectrum");
  Rational m = entries.front().first;
  for (const auto& e : entries) m = std::max(m, e.first);
  return m;
}

std::vector<Rational> QSpectrum::diagonal() const {
  std::vector<Rational> d;
  for (const auto& [value, mult] : entries)
    for (std::int64_t i = 0; i < mult; ++i) d.push_back(value);
  return d;
}

QSpectrum QSpectrum::from_diagonal(std::span<const Rational> diagonal) {
  std::map<Rational, std::int64_t, std::greater<>> grouped;
  for (const auto& v : diagonal) {
    if (v <= 0) throw Error(ErrorCode::InvalidArgument, "modular matrix entries must be positive");
    ++grouped[v];
  }
  QSpectrum s;
  s.entries.assign(grouped.begin(), grouped.end());
  return s;
}

std::int64_t two_rho_pairing(const RootSystemData& rs, const WeightVector& nu) {
  auto e = t_exponents(rs);
  require_rank(rs, nu.size());
  std::int64_t s = 0;
  for (int i = 0; i < rs.rank; ++i) s += nu.coeffs[i] * e[i];
  return s;
}

void require_deformation_parameter(const Rational& q) {
  if (q <= 0 || q >= 1) throw Error(ErrorCode::OutOfDomain, "q must lie in (0,1), got " + to_string(q));
}

QSpectrum q_matrix_spectrum(const RootSystemData& rs, const WeightVector& mu, const Rational& q) {
  require_deformation_parameter(q);
  require_dominant(rs, mu);
  std::map<std::int64_t, std::int64_t, std::greater<>> by_exponent;  // (nu,2rho) -> multiplicity
  for (const auto& [nu, mult] : weight_multiplicities(rs, mu)) by_exponent[two_rho_pairing(rs, nu)] += mult.get_si();
  QSpectrum s;
  for (const auto& [m, mult] : by_exponent) s.entries.emplace_back(rational_pow(q, -m), mult);
  return s;
}

Rational q_integer(std::int64_t m, const Rational& q) {
  return (rational_pow(q, m) - rational_pow(q, -m)) / (q - 1 / q);
}

Real q_integer(std::int64_t m, const Real& q) {
  Real qm = boost::multiprecision::pow(q, static_cast<long>(m));
  return (qm - 1 / qm) / (q - 1 / q);
}

Rational quantum_dimension(const RootSystemData& rs, const WeightVector& mu, const Rational& q) {
  return q_matrix_spectrum(rs, mu, q).trace();
}

Rational quantum_dimension_product(const RootSystemData& rs, const WeightVector& mu, const Rational& q) {
  require_deformation_parameter(q);
  require_dominant(rs, mu);
  auto pairing = root_pairings(rs, mu);
  Rational d = 1;
  for (std::size_t b = 0; b < pairing.size(); ++b)
    d *= q_integer(pairing[b] + rs.rho_pairing[b], q) / q_integer(rs.rho_pairing[b], q);
  return d;
}

Real quantum_dimension_product(const RootSystemData& rs, const WeightVector& mu, const Real& q) {
  if (q <= 0 || q >= 1) throw Error(ErrorCode::OutOfDomain, "q must lie in (0,1)");
  require_dominant(rs, mu);
  auto pairing = root_pairings(rs, mu);
  Real d = 1;
  for (std::size_t b = 0; b < pairing.size(); ++b)
    d *= q_integer(pairing[b] + rs.rho_pairing[b], q) / q_integer(rs.rho_pairing[b], q);
  return d;
}

std::vector<std::int64_t> t_exponents(const RootSystemData& rs) {
  std::vector<std::int64_t> e(rs.rank, 0);
  for (const auto& pairing : rs.root_pairing)
    for (int i = 0; i < rs.rank; ++i) e[i] += pairing[i];
  return e;
}

std::vector<Rational> t_constants(const RootSystemData& rs, const Rational& q) {
  require_deformation_parameter(q);
  std::vector<Rational> t;
  for (auto e : t_exponents(rs)) t.push_back(rational_pow(q, e));
  return t;
}

}  // namespace qk
