#pragma once

#include "vlpbw/lattice.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace vlpbw {

/// Raised for malformed lattice documents or options; the CLI maps it to an error object.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"name": "A2", "scale": 1} or {"rank": n, "gram": [[...]]}, plus optional n_max and seed.
struct LatticeSpec {
  std::optional<std::string> name;
  std::int64_t scale = 1;
  GramMatrix gram;
  std::optional<int> n_max;
  std::optional<std::uint64_t> seed;
};

LatticeSpec parse_lattice_spec(const nlohmann::json& doc);
Lattice build_lattice(const LatticeSpec& spec);

struct CommandOptions {
  std::optional<int> n_max;
  std::uint64_t seed = 0;
  int samples = 25;       // random commutator checks in verify
  bool timings = false;   // wall-clock timings break byte-for-byte reproducibility, so off by default
};

struct Report {
  nlohmann::ordered_json doc;
  bool ok = true;
};

/// n_max for a lattice when none is given: 5 / 4 / 3 for rank 1 / 2 / >= 3, raised if
/// needed so that the top weight of Phi(L) plus two is covered.
int default_n_max(const Lattice& lattice);

Report cmd_phi(const LatticeSpec& spec, const CommandOptions& options);
Report cmd_qdims(const LatticeSpec& spec, const CommandOptions& options);
Report cmd_genspace(const LatticeSpec& spec, const CommandOptions& options);
Report cmd_verify(const LatticeSpec& spec, const CommandOptions& options);
Report cmd_lie(const LatticeSpec& spec, const CommandOptions& options);

/// Dispatch by subcommand name; throws InputError for unknown names.
Report run_command(const std::string& command, const LatticeSpec& spec, const CommandOptions& options);

enum class OutputFormat { json, tsv };

/// JSON is pretty-printed; TSV has one "path<TAB>value" line per leaf.
std::string render(const nlohmann::ordered_json& doc, OutputFormat format);

nlohmann::ordered_json error_document(const std::string& type, const std::string& message);

}  // namespace vlpbw
