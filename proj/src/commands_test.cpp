#include "vlpbw/commands.hpp"

#include <doctest.h>

using namespace vlpbw;
using nlohmann::json;

namespace {

bool claim_passed(const nlohmann::ordered_json& checks, const std::string& name) {
  bool seen = false;
  for (const auto& c : checks)
    if (c["claim"] == name) {
      seen = true;
      if (!c["pass"].get<bool>()) return false;
    }
  return seen;
}

}  // namespace

TEST_CASE("parse_lattice_spec accepts both document shapes") {
  const auto named = parse_lattice_spec(json::parse(R"({"name": "A2", "scale": 1})"));
  REQUIRE(named.name);
  CHECK(*named.name == "A2");
  CHECK(named.scale == 1);
  const auto gram = parse_lattice_spec(json::parse(R"({"rank": 1, "gram": [[4]], "n_max": 4, "seed": 9})"));
  CHECK_FALSE(gram.name);
  CHECK(gram.gram == GramMatrix{{4}});
  CHECK(gram.n_max == 4);
  CHECK(gram.seed == 9u);
  CHECK(build_lattice(gram).gram() == GramMatrix{{4}});
  CHECK(build_lattice(named).rank() == 2);
}

TEST_CASE("parse_lattice_spec rejects malformed documents") {
  for (const char* bad : {R"([])", R"({})", R"({"name": "A1", "gram": [[2]]})", R"({"name": 3})",
                          R"({"name": "A1", "scale": 0})", R"({"name": "A1", "scale": "2"})", R"({"gram": []})",
                          R"({"gram": [2]})", R"({"gram": [[2.5]]})", R"({"rank": 2, "gram": [[2]]})",
                          R"({"gram": [[2]], "n_max": 0})"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_lattice_spec(json::parse(bad)), InputError);
  }
  CHECK_THROWS_AS(build_lattice(parse_lattice_spec(json::parse(R"({"gram": [[3]]})"))), InputError);
  CHECK_THROWS_AS(build_lattice(parse_lattice_spec(json::parse(R"({"name": "Q7"})"))), InputError);
  CHECK_THROWS_AS(run_command("nope", parse_lattice_spec(json::parse(R"({"name": "A1"})")), {}), InputError);
}

TEST_CASE("default_n_max") {
  CHECK(default_n_max(named_lattice("A1")) == 5);
  CHECK(default_n_max(named_lattice("A2")) == 4);
  CHECK(default_n_max(named_lattice("A3")) == 3);
  CHECK(default_n_max(Lattice(GramMatrix{{8}})) == 6);
}

TEST_CASE("cmd_phi on A2") {
  const auto r = cmd_phi(parse_lattice_spec(json::parse(R"({"name": "A2", "scale": 1})")), {});
  CHECK(r.ok);
  CHECK(r.doc["command"] == "phi");
  CHECK(r.doc["results"]["count"] == 6);
  CHECK(r.doc["results"]["norm_histogram"]["2"] == 6);
  CHECK(claim_passed(r.doc["results"]["checks"], "root_lattice_phi_is_shell"));
  CHECK(claim_passed(r.doc["results"]["checks"], "phi_definition_agrees"));
  CHECK_FALSE(r.doc.contains("timings"));
}

TEST_CASE("cmd_qdims on A1") {
  const auto r = cmd_qdims(parse_lattice_spec(json::parse(R"({"name": "A1", "scale": 1, "n_max": 5})")), {});
  CHECK(r.ok);
  CHECK(r.doc["results"]["q_dims"] == json::parse("[3,0,0,0,0]"));
}

TEST_CASE("cmd_verify on [[4]] passes every check") {
  const auto r = cmd_verify(parse_lattice_spec(json::parse(R"({"rank": 1, "gram": [[4]], "n_max": 4})")), {});
  CHECK(r.ok);
  const auto& checks = r.doc["results"]["checks"];
  for (const char* name : {"c1_equals_closed_form", "c2_in_c1", "q_dim_matches_phi", "standard_monomials_span",
                           "generators_minimal", "commutator_formula", "virasoro_modes", "lattice_products",
                           "bracket_closed_forms", "bracket_jacobi"})
    CHECK(claim_passed(checks, name));
}

TEST_CASE("cmd_genspace and cmd_lie") {
  const auto spec = parse_lattice_spec(json::parse(R"({"rank": 1, "gram": [[4]]})"));
  const auto g = cmd_genspace(spec, {});
  CHECK(g.ok);
  CHECK(g.doc["results"]["generators"].size() == 3);
  CHECK(g.doc["results"]["minimality"]["minimal"] == true);
  const auto l = cmd_lie(spec, {});
  CHECK(l.ok);
  CHECK(l.doc["results"]["semisimple"] == false);
  CHECK(l.doc["results"]["radical_kernel"].size() == 2);
}

TEST_CASE("reports are deterministic and options are echoed") {
  const auto spec = parse_lattice_spec(json::parse(R"({"name": "A1"})"));
  CommandOptions opts;
  opts.seed = 42;
  opts.n_max = 3;
  const auto a = render(cmd_verify(spec, opts).doc, OutputFormat::json);
  const auto b = render(cmd_verify(spec, opts).doc, OutputFormat::json);
  CHECK(a == b);
  const auto doc = json::parse(a);
  CHECK(doc["options"]["seed"] == 42);
  CHECK(doc["options"]["n_max"] == 3);
  opts.timings = true;
  CHECK(cmd_qdims(spec, opts).doc.contains("timings"));
}

TEST_CASE("render and error documents") {
  nlohmann::ordered_json doc;
  doc["a"] = {{"b", 1}, {"c", "x"}};
  doc["d"] = json::array({true, nullptr});
  doc["e"] = json::array();
  CHECK(render(doc, OutputFormat::tsv) == "a.b\t1\na.c\tx\nd.0\ttrue\nd.1\tnull\ne\t[]\n");
  CHECK(render(doc, OutputFormat::json).back() == '\n');
  const auto err = error_document("invalid_input", "boom");
  CHECK(err["error"]["type"] == "invalid_input");
  CHECK(err["error"]["message"] == "boom");
}
