#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qk/chebyshev.hpp"
#include "qk/error.hpp"
#include "qk/fusion.hpp"
#include "qk/khintchine.hpp"
#include "qk/models.hpp"
#include "qk/report.hpp"
#include "qk/rootsys.hpp"
#include "qk/schur.hpp"

namespace py = pybind11;
using namespace qk;

namespace {

// Exact values cross the boundary as "num/den" strings; the Python side
// turns them into fractions.Fraction.
std::vector<std::string> strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

QSpectrum spectrum_from(const std::vector<std::string>& diagonal) {
  std::vector<Rational> d;
  for (const auto& s : diagonal) d.push_back(parse_rational(s));
  return QSpectrum::from_diagonal(d);
}

FusionRule rule_from(const std::string& name) {
  if (name == "SU2") return FusionRule::SU2;
  if (name == "SO3") return FusionRule::SO3;
  throw Error(ErrorCode::InvalidArgument, "fusion rule must be SU2 or SO3");
}

py::dict irr_dict(const QuantumGroupModel& model, const IrrLabel& label) {
  auto d = irr_data(model, label);
  py::dict out;
  out["label"] = d.label.coeffs;
  out["length"] = d.length;
  out["n"] = to_string(d.n);
  out["d"] = to_string(d.d);
  out["chi_sup"] = to_string(d.chi_sup);
  return out;
}

}  // namespace

PYBIND11_MODULE(_qkhintchine, m) {
  m.doc() = "Khintchine constants and representation data of non-Kac compact quantum groups";

  static py::exception<Error> qk_error(m, "QkError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = qk_error;
      py::object instance = exc(std::string(code_name(e.code())) + ": " + e.what());
      instance.attr("code") = std::string(code_name(e.code()));
      PyErr_SetObject(exc.ptr(), instance.ptr());
    }
  });

  m.def("canonical_spec", [](const std::string& spec) { return construct_model(spec).spec(); });
  m.def("is_kac", [](const std::string& spec) { return is_kac(construct_model(spec)); });

  m.def("irr_data", [](const std::string& spec, const std::vector<std::int64_t>& label) {
    return irr_dict(construct_model(spec), WeightVector(label));
  });

  m.def(
      "dims",
      [](const std::string& spec, std::int64_t max_length) {
        auto model = construct_model(spec);
        py::list rows;
        for (std::int64_t k = 0; k <= max_length; ++k)
          for (const auto& label : enumerate_level(model, k)) rows.append(irr_dict(model, label));
        return rows;
      },
      py::arg("spec"), py::arg("max_length") = 5);

  m.def("weyl_dimension", [](const std::string& type, const std::vector<std::int64_t>& mu) {
    return to_string(weyl_dimension(build_root_system(type), WeightVector(mu)));
  });
  m.def("quantum_dimension", [](const std::string& type, const std::vector<std::int64_t>& mu, const std::string& q) {
    return to_string(quantum_dimension(build_root_system(type), WeightVector(mu), parse_rational(q)));
  });
  m.def("q_spectrum", [](const std::string& type, const std::vector<std::int64_t>& mu, const std::string& q) {
    auto s = q_matrix_spectrum(build_root_system(type), WeightVector(mu), parse_rational(q));
    std::vector<std::pair<std::string, std::int64_t>> out;
    for (const auto& [v, mult] : s.entries) out.emplace_back(to_string(v), mult);
    return out;
  });
  m.def("positive_root_count", [](const std::string& type) { return build_root_system(type).positive_roots.size(); });

  m.def("chebyshev_f", [](unsigned k, const std::string& t) { return to_string(chebyshev_f(k, parse_rational(t))); });
  m.def("chebyshev_g", [](unsigned k, const std::string& x) { return to_string(chebyshev_g(k, parse_rational(x))); });

  m.def("tensor_decompose", [](const std::string& rule, std::int64_t k, std::int64_t l) {
    std::map<std::int64_t, std::string> out;
    for (const auto& [j, mult] : tensor_decompose(rule_from(rule), k, l)) out[j] = to_string(mult);
    return out;
  });

  m.def(
      "kp",
      [](const std::string& spec, const std::string& p, const std::string& tol, std::int64_t max_length,
         unsigned threads, unsigned precision_bits) {
        RunConfig config;
        config.model_spec = spec;
        config.command = Command::Kp;
        config.p = parse_rational(p);
        config.tol = parse_rational(tol);
        config.max_length = max_length;
        config.threads = threads;
        config.precision_bits = precision_bits;
        Report rep;
        {
          py::gil_scoped_release release;
          rep = run_command(config);
        }
        return rep.doc.dump();
      },
      py::arg("spec"), py::arg("p") = "4", py::arg("tol") = "1e-10", py::arg("max_length") = 2000,
      py::arg("threads") = 1, py::arg("precision_bits") = kDefaultPrecisionBits);

  m.def(
      "run",
      [](const std::string& command, const std::string& spec, const std::string& config_json, const std::string& format) {
        RunConfig config;
        config.command = parse_command(command);
        config.model_spec = spec;
        if (!config_json.empty()) apply_config_json(config, nlohmann::json::parse(config_json));
        Report rep;
        {
          py::gil_scoped_release release;
          rep = run_command(config);
        }
        return py::make_tuple(render(rep, parse_format(format)), rep.exit_code);
      },
      py::arg("command"), py::arg("spec"), py::arg("config_json") = "", py::arg("format") = "json");

  m.def("corollary_exponents", [](const std::string& p, const std::string& r) {
    auto e = corollary_exponents(parse_rational(p), parse_rational(r));
    return std::vector<std::string>{to_string(e.to_l2), to_string(e.to_lp), to_string(e.to_lr)};
  });

  m.def("lemma_base_check", [](const std::vector<std::string>& diagonal) {
    auto r = lemma_base_check(spectrum_from(diagonal));
    return py::make_tuple(to_string(r.lhs), to_string(r.rhs), r.equal);
  });
  m.def("modular_duality_check",
        [](const std::vector<std::string>& diagonal) { return modular_duality_check(spectrum_from(diagonal)); });
  m.def(
      "random_trace_symmetric_spectrum",
      [](std::uint64_t seed, int size) {
        std::mt19937_64 rng(seed);
        return strings(random_trace_symmetric_spectrum(rng, size).diagonal());
      },
      py::arg("seed"), py::arg("size"));
}
