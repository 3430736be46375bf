#include "qk/models.hpp"

#include "qk/chebyshev.hpp"
#include "qk/error.hpp"

#include <algorithm>
#include <functional>

namespace qk {

namespace {

std::string make_spec(const ModelFamily& family) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, DrinfeldJimbo>) {
          return "djq:" + std::string(1, static_cast<char>(f.type)) + std::to_string(f.rank) + ":" + to_string(f.q);
        } else if constexpr (std::is_same_v<T, FreeOrthogonal>) {
          return "oplus:" + std::to_string(f.n) + ":" + to_string(f.nq);
        } else {
          return "aut:" + std::to_string(f.dim_b) + ":" + to_string(f.d1);
        }
      },
      family);
}

void validate(const ModelFamily& family) {
  if (const auto* dj = std::get_if<DrinfeldJimbo>(&family)) {
    if (dj->q <= 0 || dj->q >= 1)
      throw Error(ErrorCode::InvalidModel, "Drinfeld-Jimbo deformation needs 0 < q < 1, got " + to_string(dj->q));
    if (!dj->roots) throw Error(ErrorCode::InvalidModel, "missing root system");
  } else if (const auto* fo = std::get_if<FreeOrthogonal>(&family)) {
    if (fo->n < 2) throw Error(ErrorCode::InvalidModel, "free orthogonal model needs N >= 2");
    if (fo->nq < fo->n)
      throw Error(ErrorCode::InvalidModel, "free orthogonal model needs Nq = Tr(F*F) >= N, got Nq = " +
                                               to_string(fo->nq) + " < N = " + std::to_string(fo->n));
  } else {
    const auto& qa = std::get<QuantumAutomorphism>(family);
    if (qa.dim_b < 4) throw Error(ErrorCode::InvalidModel, "quantum automorphism model needs dim B >= 4");
    if (qa.d1 < qa.n1())
      throw Error(ErrorCode::InvalidModel, "quantum automorphism model needs d1 >= n1 = dim B - 1 = " +
                                               std::to_string(qa.n1()) + ", got d1 = " + to_string(qa.d1));
  }
}

std::int64_t parse_int(std::string_view text, std::string_view spec) {
  Rational r = parse_rational(text);
  if (r.get_den() != 1 || !r.get_num().fits_slong_p())
    throw Error(ErrorCode::MalformedSpec, "expected an integer in model spec '" + std::string(spec) + "'");
  return r.get_num().get_si();
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

QuantumGroupModel::QuantumGroupModel(ModelFamily family) : family_(std::move(family)) {
  validate(family_);
  spec_ = make_spec(family_);
}

std::optional<FusionRule> QuantumGroupModel::fusion_rule() const {
  if (free_orthogonal()) return FusionRule::SU2;
  if (quantum_automorphism()) return FusionRule::SO3;
  if (const auto* dj = drinfeld_jimbo(); dj && dj->type == LieType::A && dj->rank == 1) return FusionRule::SU2;
  return std::nullopt;
}

QuantumGroupModel make_drinfeld_jimbo(LieType type, int rank, const Rational& q) {
  return QuantumGroupModel(DrinfeldJimbo{type, rank, q, shared_root_system(type, rank)});
}

QuantumGroupModel make_free_orthogonal(std::int64_t n, const Rational& nq) {
  return QuantumGroupModel(FreeOrthogonal{n, nq});
}

QuantumGroupModel make_quantum_automorphism(std::int64_t dim_b, const Rational& d1) {
  return QuantumGroupModel(QuantumAutomorphism{dim_b, d1});
}

QuantumGroupModel construct_model(std::string_view spec) {
  auto parts = split(spec, ':');
  if (parts.size() != 3) {
    throw Error(ErrorCode::MalformedSpec,
                "model spec '" + std::string(spec) + "' must be djq:<type><rank>:<q>, oplus:<N>:<Nq> or aut:<dimB>:<d1>");
  }
  auto parameter = [&](std::string_view text) {
    try {
      return parse_rational(text);
    } catch (const Error& e) {
      throw Error(ErrorCode::MalformedSpec, "bad parameter in model spec '" + std::string(spec) + "': " + e.what());
    }
  };
  if (parts[0] == "djq") {
    RootSystemData rs = build_root_system(parts[1]);
    return make_drinfeld_jimbo(rs.type, rs.rank, parameter(parts[2]));
  }
  if (parts[0] == "oplus") return make_free_orthogonal(parse_int(parts[1], spec), parameter(parts[2]));
  if (parts[0] == "aut") return make_quantum_automorphism(parse_int(parts[1], spec), parameter(parts[2]));
  throw Error(ErrorCode::MalformedSpec, "unknown model family '" + std::string(parts[0]) + "' in '" + std::string(spec) + "'");
}

bool is_kac(const QuantumGroupModel& model) {
  if (model.is_drinfeld_jimbo()) return false;
  if (const auto* fo = model.free_orthogonal()) return fo->nq == fo->n;
  const auto* qa = model.quantum_automorphism();
  return qa->d1 == qa->n1();
}

namespace {

std::int64_t integer_label(const QuantumGroupModel& model, const IrrLabel& label) {
  if (label.size() != 1 || label.coeffs[0] < 0)
    throw Error(ErrorCode::InvalidLabel, "model " + model.spec() + " is labelled by k >= 0, got " + label.str());
  if (label.coeffs[0] > 1000000) throw Error(ErrorCode::InvalidLabel, "label too large: " + label.str());
  return label.coeffs[0];
}

}  // namespace

IrrData irr_data(const QuantumGroupModel& model, const IrrLabel& label) {
  IrrData out;
  out.label = label;
  if (const auto* dj = model.drinfeld_jimbo()) {
    if (label.size() != static_cast<std::size_t>(dj->rank) || !label.dominant())
      throw Error(ErrorCode::InvalidLabel, "model " + model.spec() + " needs a dominant weight of rank " +
                                               std::to_string(dj->rank) + ", got " + label.str());
    out.n = weyl_dimension(*dj->roots, label);
    // Equal to Tr(Q_mu) exactly; the product form avoids building the weight system.
    out.d = quantum_dimension_product(*dj->roots, label, dj->q);
    out.chi_sup = out.n;
    out.length = label.level();
    return out;
  }
  const auto k = static_cast<unsigned>(integer_label(model, label));
  out.length = k;
  if (const auto* fo = model.free_orthogonal()) {
    out.n = chebyshev_f(k, Rational(static_cast<long>(fo->n))).get_num();
    out.d = chebyshev_f(k, fo->nq);
    out.chi_sup = k + 1;
  } else {
    const auto* qa = model.quantum_automorphism();
    out.n = chebyshev_g(k, qa->classical_argument()).get_num();
    out.d = chebyshev_g(k, qa->quantum_argument());
    out.chi_sup = 2 * k + 1;
  }
  return out;
}

std::vector<IrrLabel> enumerate_level(const QuantumGroupModel& model, std::int64_t k) {
  if (k < 0) return {};
  const auto* dj = model.drinfeld_jimbo();
  if (!dj) return {IrrLabel{k}};
  std::vector<IrrLabel> out;
  std::vector<std::int64_t> current(dj->rank, 0);
  // Compositions of k into rank parts, first coordinate largest first.
  std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t left) {
    if (i == dj->rank - 1) {
      current[i] = left;
      out.emplace_back(current);
      return;
    }
    for (std::int64_t c = left; c >= 0; --c) {
      current[i] = c;
      rec(i + 1, left - c);
    }
  };
  rec(0, k);
  return out;
}

std::vector<std::pair<Integer, Rational>> graded_dimensions(const QuantumGroupModel& model, unsigned kmax) {
  std::vector<Rational> n, d;
  if (const auto* fo = model.free_orthogonal()) {
    n = chebyshev_f_sequence(kmax, Rational(static_cast<long>(fo->n)));
    d = chebyshev_f_sequence(kmax, fo->nq);
  } else if (const auto* qa = model.quantum_automorphism()) {
    n = chebyshev_g_sequence(kmax, qa->classical_argument());
    d = chebyshev_g_sequence(kmax, qa->quantum_argument());
  } else {
    throw Error(ErrorCode::InvalidModel, "graded dimensions need an N0-graded model");
  }
  std::vector<std::pair<Integer, Rational>> out;
  for (unsigned k = 0; k <= kmax; ++k) out.emplace_back(n[k].get_num(), d[k]);
  return out;
}

}  // namespace qk
