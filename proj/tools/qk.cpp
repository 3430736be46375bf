// qk: representation data and Khintchine constants of compact quantum groups.

#include "qk/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

int fail(const qk::Error& e) {
  std::cerr << "error " << qk::code_name(e.code()) << ": " << e.what() << "\n";
  return qk::exit_code_for(e);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Khintchine constants and representation data of non-Kac compact quantum groups"};
  app.require_subcommand(1);

  std::string model, p, tol, format, output, config_path, r, label;
  std::int64_t max_length = 0;
  unsigned precision_bits = 0, threads = 0;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"dims", "list (n, d, ||chi||) level by level"},
      {"spectrum", "modular matrix spectrum of one irreducible (djq models)"},
      {"fusion", "decompose the tensor product of two irreducibles"},
      {"kp", "certified Khintchine constant K_p"},
      {"decay", "decay rate of n/d along the length"},
      {"constants", "L^r -> L^1 constants derived from K_p"},
      {"verify", "run the invariant suite for the model"},
      {"table", "plot-ready rows (k, max n/d) and (p, K_p)"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--model", model, "djq:<type><rank>:<q> | oplus:<N>:<Nq> | aut:<dimB>:<d1>");
    sub->add_option("--p", p, "exponent p >= 2 (dyadic >= 4 for constants)");
    sub->add_option("--tol", tol, "tail tolerance (default 1e-10)");
    sub->add_option("--max-length", max_length, "level budget or horizon");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", output, "output file (stdout when absent)");
    sub->add_option("--precision-bits", precision_bits, "working precision in bits (>= 64)");
    sub->add_option("--threads", threads, "worker threads; output does not depend on it");
    sub->add_option("--config", config_path, "JSON file with defaults; flags override");
    sub->add_option("--r", r, "target exponent r >= 1 for constants");
    sub->add_option("--label", label, "weight '1,0' for spectrum, pair 'k,l' for fusion");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    // Unknown subcommands and bad flags are validation errors.
    const bool unknown = dynamic_cast<const CLI::ExtrasError*>(&e) || dynamic_cast<const CLI::RequiredError*>(&e);
    std::cerr << "error " << (unknown ? "E_UNKNOWN_COMMAND" : "E_INVALID_ARGUMENT") << ": " << e.what() << "\n";
    return 2;
  }

  try {
    CLI::App* sub = nullptr;
    for (auto* s : subs)
      if (s->parsed()) sub = s;
    qk::RunConfig config;
    config.command = qk::parse_command(sub->get_name());
    if (sub->count("--config")) {
      std::ifstream in(config_path);
      if (!in) throw qk::Error(qk::ErrorCode::Io, "cannot read config '" + config_path + "'");
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw qk::Error(qk::ErrorCode::InvalidArgument, "config '" + config_path + "': " + e.what());
      }
      const auto command = config.command;
      qk::apply_config_json(config, doc);
      if (config.command != command)
        throw qk::Error(qk::ErrorCode::ConflictingFlags, "config names a different command than the command line");
    }
    if (sub->count("--model")) config.model_spec = model;
    if (sub->count("--p")) config.p = qk::parse_rational(p);
    if (sub->count("--tol")) config.tol = qk::parse_rational(tol);
    if (sub->count("--max-length")) config.max_length = max_length;
    if (sub->count("--format")) config.format = qk::parse_format(format);
    if (sub->count("--output")) config.output_path = output;
    if (sub->count("--precision-bits")) config.precision_bits = precision_bits;
    if (sub->count("--threads")) config.threads = threads;
    if (sub->count("--r")) config.r = qk::parse_rational(r);
    if (sub->count("--label")) config.label = label;

    const auto report = qk::run_command(config);
    qk::emit_report(report, config.format, config.output_path);
    return report.exit_code;
  } catch (const qk::Error& e) {
    return fail(e);
  }
}
