// vlpbw: lattice VOA analyses from the command line.
//
//   vlpbw <phi|qdims|genspace|verify|lie> [--input FILE | --name NAME --scale K]
//         [--n-max N] [--seed S] [--format json|tsv] [--timings]
//
// Exit status: 0 when every check passed, 1 when some check failed, 2 on invalid input.

#include "vlpbw/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

vlpbw::LatticeSpec read_spec(const std::string& input, const std::string& name, std::int64_t scale) {
  nlohmann::json doc;
  if (!input.empty()) {
    std::ifstream in(input);
    if (!in) throw vlpbw::InputError("cannot open input file '" + input + "'");
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw vlpbw::InputError(std::string("malformed JSON: ") + e.what());
    }
  } else if (!name.empty()) {
    doc = {{"name", name}, {"scale", scale}};
  } else {
    throw vlpbw::InputError("give either --input FILE or --name NAME");
  }
  return vlpbw::parse_lattice_spec(doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analyses of lattice vertex operator algebras"};
  app.require_subcommand(1, 1);

  std::string input;
  std::string name;
  std::int64_t scale = 1;
  std::optional<int> n_max;
  std::uint64_t seed = 0;
  int samples = 25;
  std::string format = "json";
  bool timings = false;

  auto add_common = [&](CLI::App* sub) {
    auto* in = sub->add_option("--input", input, "lattice document (JSON)");
    auto* nm = sub->add_option("--name", name, "named root lattice: A<n>, D<n>, E6, E7, E8");
    in->excludes(nm);
    sub->add_option("--scale", scale, "multiply the Gram matrix by K")->check(CLI::PositiveNumber);
    sub->add_option("--n-max", n_max, "top weight to analyse")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "seed for the randomized identity checks");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_flag("--timings", timings, "report wall-clock timings (output is then not reproducible)");
  };
  for (const char* cmd : {"phi", "qdims", "genspace", "lie"}) add_common(app.add_subcommand(cmd));
  auto* verify = app.add_subcommand("verify", "run every check");
  add_common(verify);
  verify->add_option("--samples", samples, "number of random commutator checks")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto out_format = format == "tsv" ? vlpbw::OutputFormat::tsv : vlpbw::OutputFormat::json;
  try {
    const vlpbw::LatticeSpec spec = read_spec(input, name, scale);
    vlpbw::CommandOptions options;
    options.n_max = n_max;
    options.seed = seed;
    options.samples = samples;
    options.timings = timings;
    const vlpbw::Report report = vlpbw::run_command(command, spec, options);
    std::cout << vlpbw::render(report.doc, out_format);
    return report.ok ? 0 : 1;
  } catch (const vlpbw::InputError& e) {
    std::cout << vlpbw::render(vlpbw::error_document("invalid_input", e.what()), out_format);
    return 2;
  } catch (const std::exception& e) {
    std::cout << vlpbw::render(vlpbw::error_document("internal_error", e.what()), out_format);
    return 3;
  }
}
