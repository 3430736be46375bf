#include "qk/report.hpp"

#include "qk/chebyshev.hpp"
#include "qk/fusion.hpp"
#include "qk/khintchine.hpp"
#include "qk/models.hpp"
#include "qk/rootsys.hpp"
#include "qk/schur.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qk {

namespace mp = boost::multiprecision;

namespace {

constexpr std::pair<Command, std::string_view> kCommands[] = {
    {Command::Dims, "dims"},   {Command::Spectrum, "spectrum"},   {Command::Fusion, "fusion"},
    {Command::Kp, "kp"},       {Command::Decay, "decay"},         {Command::Constants, "constants"},
    {Command::Verify, "verify"}, {Command::Table, "table"},
};

std::int64_t default_max_length(Command c) {
  switch (c) {
    case Command::Dims: return 5;
    case Command::Decay: return 50;
    case Command::Table: return 30;
    case Command::Verify: return 3;
    default: return 2000;
  }
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::string cleaned;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') cleaned.push_back(c);
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error(ErrorCode::InvalidLabel, "bad label '" + std::string(text) + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::InvalidLabel, "empty label");
  return out;
}

std::string label_text(const QuantumGroupModel& model, const IrrLabel& label) {
  return model.is_drinfeld_jimbo() ? label.str() : std::to_string(label.coeffs.at(0));
}

struct Context {
  const RunConfig& config;
  QuantumGroupModel model;
  int digits;

  std::string real(const Real& v) const { return format_real(v, digits); }
  std::int64_t max_length() const { return config.max_length.value_or(default_max_length(config.command)); }
};

Json header(const Context& ctx) {
  Json doc;
  doc["schema"] = kSchema;
  doc["command"] = command_name(ctx.config.command);
  doc["model"] = ctx.model.spec();
  doc["kac"] = is_kac(ctx.model);
  doc["normalization"] = kNormalization;
  doc["precision_bits"] = ctx.config.precision_bits;
  return doc;
}

Rational p_or(const RunConfig& c, long fallback) { return c.p.value_or(Rational(fallback)); }

Json kp_json(const Context& ctx, const KpReport& r) {
  Json j;
  j["p"] = to_string(r.p);
  j["terms_summed"] = r.terms_summed;
  j["partial_sum"] = ctx.real(r.partial_sum);
  j["tail_bound"] = ctx.real(r.tail_bound);
  j["verdict"] = verdict_name(r.verdict);
  j["kp_lower"] = ctx.real(r.kp_lower);
  j["kp_upper"] = ctx.real(r.kp_upper);
  if (!r.divergence_witness.empty()) j["divergence_witness"] = r.divergence_witness;
  return j;
}

KpReport run_kp(const Context& ctx, const Rational& p) {
  return kp_constant(ctx.model, p, to_real(ctx.config.tol), ctx.max_length(),
                     KpOptions{ctx.config.threads, ctx.config.precision_bits});
}

Report dims(const Context& ctx) {
  Report rep{header(ctx), {{"length", "label", "n", "d", "chi_sup"}, {}}, 0};
  Json rows = Json::array();
  for (std::int64_t k = 0; k <= ctx.max_length(); ++k) {
    for (const auto& label : enumerate_level(ctx.model, k)) {
      auto data = irr_data(ctx.model, label);
      const std::string l = label_text(ctx.model, label);
      rows.push_back({{"length", k}, {"label", l}, {"n", to_string(data.n)}, {"d", to_string(data.d)},
                      {"chi_sup", to_string(data.chi_sup)}});
      rep.table.rows.push_back({std::to_string(k), l, to_string(data.n), to_string(data.d), to_string(data.chi_sup)});
    }
  }
  rep.doc["max_length"] = ctx.max_length();
  rep.doc["rows"] = std::move(rows);
  return rep;
}

Report spectrum(const Context& ctx) {
  const auto* dj = ctx.model.drinfeld_jimbo();
  if (!dj)
    throw Error(ErrorCode::MissingQData, "modular spectra are only available for Drinfeld-Jimbo models; " +
                                             ctx.model.spec() + " is determined only through (n, d)");
  if (!ctx.config.label) throw Error(ErrorCode::InvalidLabel, "spectrum needs --label, e.g. --label 1,0");
  const WeightVector mu(parse_int_list(*ctx.config.label));
  if (static_cast<int>(mu.size()) != dj->rank || !mu.dominant())
    throw Error(ErrorCode::NotDominant, "label " + mu.str() + " is not a dominant weight of " + dj->roots->name());
  const auto q = q_matrix_spectrum(*dj->roots, mu, dj->q);
  const auto t = t_constants(*dj->roots, dj->q);
  Rational expected_norm = 1;
  for (int i = 0; i < dj->rank; ++i) expected_norm *= rational_pow(t[i], -static_cast<long>(mu.coeffs[i]));

  Report rep{header(ctx), {{"eigenvalue", "multiplicity"}, {}}, 0};
  rep.doc["label"] = mu.str();
  rep.doc["n"] = std::to_string(q.size());
  rep.doc["d"] = to_string(q.trace());
  rep.doc["inverse_trace"] = to_string(q.inverse_trace());
  rep.doc["trace_symmetric"] = q.trace_symmetric();
  rep.doc["norm"] = to_string(q.max_eigenvalue());
  rep.doc["norm_from_t"] = to_string(expected_norm);
  Json tj = Json::array();
  for (const auto& ti : t) tj.push_back(to_string(ti));
  rep.doc["t"] = std::move(tj);
  Json entries = Json::array();
  for (const auto& [value, mult] : q.entries) {
    entries.push_back({{"eigenvalue", to_string(value)}, {"multiplicity", mult}});
    rep.table.rows.push_back({to_string(value), std::to_string(mult)});
  }
  rep.doc["entries"] = std::move(entries);
  return rep;
}

Report fusion(const Context& ctx) {
  auto rule = ctx.model.fusion_rule();
  if (!rule) throw Error(ErrorCode::InvalidModel, "fusion rules are only tabulated for N0-graded models and djq:A1");
  if (!ctx.config.label) throw Error(ErrorCode::InvalidLabel, "fusion needs --label k,l");
  auto kl = parse_int_list(*ctx.config.label);
  if (kl.size() != 2) throw Error(ErrorCode::InvalidLabel, "fusion needs exactly two labels, got '" + *ctx.config.label + "'");
  const auto product = tensor_decompose(*rule, kl[0], kl[1]);

  auto data = [&](std::int64_t k) { return irr_data(ctx.model, IrrLabel{k}); };
  Integer n_sum = 0;
  Rational d_sum = 0;
  Report rep{header(ctx), {{"label", "multiplicity"}, {}}, 0};
  rep.doc["rule"] = *rule == FusionRule::SU2 ? "SU2" : "SO3";
  rep.doc["left"] = kl[0];
  rep.doc["right"] = kl[1];
  Json parts = Json::array();
  for (const auto& [j, m] : product) {
    parts.push_back({{"label", j}, {"multiplicity", to_string(m)}});
    rep.table.rows.push_back({std::to_string(j), to_string(m)});
    auto dj = data(j);
    n_sum += m * dj.n;
    d_sum += Rational(m) * dj.d;
  }
  rep.doc["product"] = std::move(parts);
  auto a = data(kl[0]), b = data(kl[1]);
  rep.doc["classical_dimension_preserved"] = n_sum == a.n * b.n;
  rep.doc["quantum_dimension_preserved"] = d_sum == a.d * b.d;
  return rep;
}

Report kp(const Context& ctx) {
  const auto r = run_kp(ctx, p_or(ctx.config, 4));
  Report rep{header(ctx), {{"p", "terms_summed", "partial_sum", "tail_bound", "verdict", "kp_lower", "kp_upper"}, {}}, 0};
  rep.doc["tol"] = to_string(ctx.config.tol);
  rep.doc["max_length"] = ctx.max_length();
  Json body = kp_json(ctx, r);
  for (auto it = body.begin(); it != body.end(); ++it) rep.doc[it.key()] = it.value();
  rep.table.rows.push_back({to_string(r.p), std::to_string(r.terms_summed), ctx.real(r.partial_sum),
                            ctx.real(r.tail_bound), std::string(verdict_name(r.verdict)), ctx.real(r.kp_lower),
                            ctx.real(r.kp_upper)});
  if (r.verdict == Verdict::Inconclusive) rep.exit_code = 3;
  return rep;
}

Report decay(const Context& ctx) {
  const auto h = ctx.max_length();
  if (h > 100000) throw Error(ErrorCode::InvalidArgument, "decay horizon too large");
  const auto d = decay_rate(ctx.model, static_cast<unsigned>(h));
  Report rep{header(ctx), {{"horizon", "theoretical_base", "empirical_base", "constant_envelope"}, {}}, 0};
  rep.doc["horizon"] = d.horizon;
  rep.doc["theoretical_base"] = ctx.real(d.theoretical_base);
  rep.doc["empirical_base"] = ctx.real(d.empirical_base);
  rep.doc["constant_envelope"] = ctx.real(d.constant_envelope);
  rep.table.rows.push_back({std::to_string(d.horizon), ctx.real(d.theoretical_base), ctx.real(d.empirical_base),
                            ctx.real(d.constant_envelope)});
  return rep;
}

Report constants(const Context& ctx) {
  const Rational p = p_or(ctx.config, 4);
  const Rational r = ctx.config.r.value_or(Rational(2));
  corollary_exponents(p, r);  // validates before the long computation
  const auto k = run_kp(ctx, p);
  const auto c = corollary_constants(k, r);
  Report rep{header(ctx), {{"p", "r", "exponent_2_1", "exponent_p_1", "exponent_r_1", "c_2_1", "c_p_1", "c_r_1"}, {}}, 0};
  rep.doc["p"] = to_string(p);
  rep.doc["r"] = to_string(r);
  rep.doc["kp"] = kp_json(ctx, k);
  rep.doc["exponents"] = {{"to_l2", to_string(c.exponents.to_l2)},
                          {"to_lp", to_string(c.exponents.to_lp)},
                          {"to_lr", to_string(c.exponents.to_lr)}};
  rep.doc["constants"] = {{"c_2_1", ctx.real(c.c_2_1)}, {"c_p_1", ctx.real(c.c_p_1)}, {"c_r_1", ctx.real(c.c_r_1)}};
  rep.table.rows.push_back({to_string(p), to_string(r), to_string(c.exponents.to_l2), to_string(c.exponents.to_lp),
                            to_string(c.exponents.to_lr), ctx.real(c.c_2_1), ctx.real(c.c_p_1), ctx.real(c.c_r_1)});
  return rep;
}

struct CheckList {
  Json items = Json::array();
  Table table{{"check", "passed", "detail"}, {}};
  bool all = true;

  void add(const std::string& name, bool ok, const std::string& detail = "") {
    items.push_back({{"check", name}, {"passed", ok}, {"detail", detail}});
    table.rows.push_back({name, ok ? "true" : "false", detail});
    all = all && ok;
  }
};

void verify_drinfeld_jimbo(const Context& ctx, const DrinfeldJimbo& dj, CheckList& checks) {
  const auto& rs = *dj.roots;
  const auto t = t_constants(rs, dj.q);
  Rational t_max = 0;
  bool t_below_one = true;
  for (const auto& ti : t) {
    t_below_one = t_below_one && ti < 1;
    if (ti > t_max) t_max = ti;
  }
  checks.add("t_constants_below_one", t_below_one);

  bool mult = true, weyl = true, sym = true, norm = true, growth = true, lemma = true, duality = true;
  std::string first_failure;
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag && first_failure.empty()) first_failure = what;
    flag = false;
  };
  for (std::int64_t k = 0; k <= ctx.max_length(); ++k) {
    for (const auto& mu : enumerate_level(ctx.model, k)) {
      Integer count = 0;
      for (const auto& [w, m] : weight_multiplicities(rs, mu)) count += m;
      if (count != weyl_dimension(rs, mu)) fail(mult, "multiplicities " + mu.str());
      const auto q = q_matrix_spectrum(rs, mu, dj.q);
      if (q.trace() != quantum_dimension_product(rs, mu, dj.q)) fail(weyl, "q-Weyl " + mu.str());
      if (!q.trace_symmetric()) fail(sym, "trace symmetry " + mu.str());
      Rational expected = 1;
      for (int i = 0; i < rs.rank; ++i) expected *= rational_pow(t[i], -static_cast<long>(mu.coeffs[i]));
      if (q.max_eigenvalue() != expected) fail(norm, "norm " + mu.str());
      if (q.trace() < rational_pow(t_max, -static_cast<long>(k))) fail(growth, "growth " + mu.str());
      if (!lemma_base_check(q).equal) fail(lemma, "base case " + mu.str());
      if (q.size() <= 30 && !modular_duality_check(q)) fail(duality, "duality " + mu.str());
    }
  }
  checks.add("multiplicities_sum_to_weyl_dimension", mult);
  checks.add("spectrum_trace_equals_q_weyl_product", weyl);
  checks.add("spectrum_trace_symmetric", sym);
  checks.add("norm_equals_t_product", norm);
  checks.add("quantum_dimension_growth", growth);
  checks.add("lemma_base_case", lemma);
  checks.add("modular_duality", duality, "spectra of size <= 30");

  if (rs.type == LieType::A && rs.rank == 1) {
    auto bridge = make_free_orthogonal(2, dj.q + 1 / dj.q);
    auto graded = graded_dimensions(bridge, 30);
    bool same = true;
    for (std::int64_t k = 0; k <= 30; ++k) {
      auto d = irr_data(ctx.model, IrrLabel{k});
      same = same && d.n == graded[k].first && d.d == graded[k].second;
    }
    checks.add("su2_bridge_dimensions", same, bridge.spec());
  }
  if (!first_failure.empty()) checks.add("first_failure", false, first_failure);
}

void verify_graded(const Context& ctx, CheckList& checks) {
  Rational tn, td;
  bool even = false;
  if (const auto* fo = ctx.model.free_orthogonal()) {
    tn = Rational(static_cast<long>(fo->n));
    td = fo->nq;
  } else {
    const auto* qa = ctx.model.quantum_automorphism();
    tn = qa->classical_argument();
    td = qa->quantum_argument();
    even = true;
  }
  auto graded = graded_dimensions(ctx.model, 300);
  bool closed = true, env = true;
  for (const Rational& x : {tn, td}) {
    const Real xr = to_real(x);
    const Real t = even ? Real(mp::sqrt(xr)) : xr;
    if (t <= 2) continue;
    for (unsigned k = 0; k <= 300; ++k) {
      const unsigned index = even ? 2 * k : k;
      const Real exact = to_real(even ? chebyshev_g(k, x) : chebyshev_f(k, x));
      if (mp::abs(chebyshev_f_closed(index, t) - exact) > exact * Real("1e-9")) closed = false;
      if (!envelope(index, t).contains(exact)) env = false;
    }
  }
  checks.add("chebyshev_recursion_matches_closed_form", closed, "k <= 300");
  checks.add("chebyshev_envelope_contains_values", env, "k <= 300");

  const auto rule = *ctx.model.fusion_rule();
  bool hom = true;
  for (std::int64_t k = 0; k <= 20; ++k)
    for (std::int64_t l = 0; l <= 20; ++l) {
      Integer n = 0;
      Rational d = 0;
      for (const auto& [j, m] : tensor_decompose(rule, k, l)) {
        n += m * graded[j].first;
        d += Rational(m) * graded[j].second;
      }
      hom = hom && n == graded[k].first * graded[l].first && d == graded[k].second * graded[l].second;
    }
  checks.add("fusion_dimension_homomorphism", hom, "k, l <= 20");

  if (!is_kac(ctx.model)) {
    const auto d = decay_rate(ctx.model, 50);
    // Polynomial prefactors only fade like k^{1/k}; compare where the numerator grows exponentially.
    const bool exponential = tn > (even ? 4 : 2);
    if (exponential) {
      const bool close = mp::abs(d.empirical_base / d.theoretical_base - 1) < Real("0.01");
      checks.add("empirical_decay_matches_theory", close,
                 "empirical " + format_real(d.empirical_base, 8) + " vs " + format_real(d.theoretical_base, 8));
    }
  }
}

Report verify(const Context& ctx) {
  CheckList checks;
  bool d_ge_n = true, kac_consistent = true;
  bool all_equal = true;
  for (std::int64_t k = 0; k <= ctx.max_length(); ++k)
    for (const auto& label : enumerate_level(ctx.model, k)) {
      auto data = irr_data(ctx.model, label);
      d_ge_n = d_ge_n && data.d >= Rational(data.n);
      all_equal = all_equal && data.d == Rational(data.n);
    }
  kac_consistent = all_equal == is_kac(ctx.model);
  checks.add("quantum_dimension_dominates_classical", d_ge_n);
  checks.add("kac_flag_consistent", kac_consistent);

  if (const auto* dj = ctx.model.drinfeld_jimbo())
    verify_drinfeld_jimbo(ctx, *dj, checks);
  else
    verify_graded(ctx, checks);

  const Rational p = 4;
  const auto k = kp_constant(ctx.model, p, Real("1e-10"), 2000, KpOptions{ctx.config.threads, ctx.config.precision_bits});
  const Verdict expected = is_kac(ctx.model) ? Verdict::Divergent : Verdict::Converged;
  checks.add("kp_verdict", k.verdict == expected, "p = 4: " + std::string(verdict_name(k.verdict)));
  if (!is_kac(ctx.model)) {
    bool monotone = true;
    Real previous = real_infinity();
    for (std::int64_t L : {4, 8, 16, 32, 64}) {
      Real tail = certified_tail(ctx.model, p, L);
      monotone = monotone && tail <= previous;
      previous = tail;
    }
    checks.add("tail_bound_nonincreasing", monotone);
  }

  Report rep{header(ctx), checks.table, checks.all ? 0 : 1};
  rep.doc["max_length"] = ctx.max_length();
  rep.doc["passed"] = checks.all;
  rep.doc["checks"] = std::move(checks.items);
  return rep;
}

Report table(const Context& ctx) {
  Report rep{header(ctx), {{"kind", "x", "y"}, {}}, 0};
  Json rows = Json::array();
  auto add = [&](const char* kind, const std::string& x, const std::string& y) {
    rows.push_back({{"kind", kind}, {"x", x}, {"y", y}});
    rep.table.rows.push_back({kind, x, y});
  };
  for (std::int64_t k = 0; k <= ctx.max_length(); ++k) {
    Rational best = 0;
    for (const auto& label : enumerate_level(ctx.model, k)) {
      auto data = irr_data(ctx.model, label);
      Rational ratio = Rational(data.n) / data.d;
      if (ratio > best) best = ratio;
    }
    add("ratio", std::to_string(k), ctx.real(to_real(best)));
  }
  std::vector<Rational> ps;
  if (ctx.config.p)
    ps.push_back(*ctx.config.p);
  else
    ps = {Rational(4), Rational(8), Rational(16)};
  for (const auto& p : ps) {
    const auto r = kp_constant(ctx.model, p, to_real(ctx.config.tol), 2000,
                               KpOptions{ctx.config.threads, ctx.config.precision_bits});
    add("kp", to_string(p), r.verdict == Verdict::Converged ? ctx.real(r.kp_upper) : "inf");
    if (r.verdict == Verdict::Inconclusive) rep.exit_code = 3;
  }
  rep.doc["rows"] = std::move(rows);
  return rep;
}

}  // namespace

Command parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommands)
    if (n == name) return c;
  throw Error(ErrorCode::UnknownCommand, "unknown command '" + std::string(name) + "'");
}

std::string_view command_name(Command c) {
  for (const auto& [k, n] : kCommands)
    if (k == c) return n;
  return "?";
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw Error(ErrorCode::InvalidArgument, "format must be json or csv, got '" + std::string(name) + "'");
}

void validate(const RunConfig& c) {
  if (c.model_spec.empty()) throw Error(ErrorCode::InvalidArgument, "missing --model");
  if (c.tol <= 0) throw Error(ErrorCode::InvalidArgument, "tol must be > 0");
  if (c.max_length && *c.max_length < 1) throw Error(ErrorCode::InvalidArgument, "max-length must be >= 1");
  if (c.precision_bits < kMinPrecisionBits) throw Error(ErrorCode::InvalidArgument, "precision-bits must be >= 64");
  if (c.threads < 1 || c.threads > 256) throw Error(ErrorCode::InvalidArgument, "threads must be in 1..256");

  const bool uses_p = c.command == Command::Kp || c.command == Command::Constants || c.command == Command::Table;
  const bool uses_label = c.command == Command::Spectrum || c.command == Command::Fusion;
  if (c.p && !uses_p)
    throw Error(ErrorCode::ConflictingFlags, "--p has no meaning for " + std::string(command_name(c.command)));
  if (c.label && !uses_label)
    throw Error(ErrorCode::ConflictingFlags, "--label has no meaning for " + std::string(command_name(c.command)));
  if (c.r && c.command != Command::Constants)
    throw Error(ErrorCode::ConflictingFlags, "--r is only used by constants");
}

void apply_config_json(RunConfig& config, const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::InvalidArgument, "config file must hold a JSON object");
  auto text = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    std::string key = it.key();
    for (char& ch : key)
      if (ch == '-') ch = '_';
    const auto& v = it.value();
    try {
      if (key == "model") config.model_spec = text(v);
      else if (key == "command") config.command = parse_command(text(v));
      else if (key == "p") config.p = parse_rational(text(v));
      else if (key == "tol") config.tol = parse_rational(text(v));
      else if (key == "max_length") config.max_length = v.get<std::int64_t>();
      else if (key == "format") config.format = parse_format(text(v));
      else if (key == "output") config.output_path = text(v);
      else if (key == "precision_bits") config.precision_bits = v.get<unsigned>();
      else if (key == "threads") config.threads = v.get<unsigned>();
      else if (key == "r") config.r = parse_rational(text(v));
      else if (key == "label") config.label = text(v);
      else throw Error(ErrorCode::InvalidArgument, "unknown config key '" + it.key() + "'");
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::InvalidArgument, "config key '" + it.key() + "': " + e.what());
    }
  }
}

Report run_command(const RunConfig& config) {
  validate(config);
  PrecisionScope scope(config.precision_bits);
  Context ctx{config, construct_model(config.model_spec), static_cast<int>(digits10_for_bits(config.precision_bits))};
  switch (config.command) {
    case Command::Dims: return dims(ctx);
    case Command::Spectrum: return spectrum(ctx);
    case Command::Fusion: return fusion(ctx);
    case Command::Kp: return kp(ctx);
    case Command::Decay: return decay(ctx);
    case Command::Constants: return constants(ctx);
    case Command::Verify: return verify(ctx);
    case Command::Table: return table(ctx);
  }
  throw Error(ErrorCode::UnknownCommand, "unhandled command");
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render(const Report& report, Format format) {
  if (format == Format::Json) return report.doc.dump(2) + "\n";
  std::string out;
  // Provenance as comment lines ahead of the header.
  for (const char* key : {"schema", "command", "model", "normalization", "precision_bits"}) {
    const auto& v = report.doc.at(key);
    out += "# " + std::string(key) + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  }
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += csv_field(fields[i]);
    }
    out += "\n";
  };
  line(report.table.header);
  for (const auto& row : report.table.rows) line(row);
  return out;
}

std::size_t emit_report(const Report& report, Format format, const std::optional<std::string>& path) {
  const std::string bytes = render(report, format);
  if (!path || path->empty() || *path == "-") {
    std::cout << bytes << std::flush;
    return bytes.size();
  }
  std::ofstream out(*path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + *path + "': " + std::strerror(errno));
  out << bytes;
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write to '" + *path + "' failed: " + std::strerror(errno));
  return bytes.size();
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Io: return 4;
    case ErrorCode::Inconclusive: return 3;
    default: return 2;
  }
}

}  // namespace qk
