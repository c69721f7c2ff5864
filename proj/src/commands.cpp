#include "vlpbw/commands.hpp"

#include "vlpbw/liealg.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

namespace vlpbw {

using nlohmann::json;
using nlohmann::ordered_json;

// ---------------------------------------------------------------- input

namespace {

template <typename T>
T read_integer(const json& value, const char* field) {
  if (!value.is_number_integer()) throw InputError(std::string("field '") + field + "' must be an integer");
  return value.get<T>();
}

}  // namespace

LatticeSpec parse_lattice_spec(const json& doc) {
  if (!doc.is_object()) throw InputError("lattice document must be a JSON object");
  LatticeSpec spec;
  const bool named = doc.contains("name");
  const bool explicit_gram = doc.contains("gram");
  if (named == explicit_gram) throw InputError("lattice document needs exactly one of 'name' or 'gram'");
  if (named) {
    if (!doc["name"].is_string()) throw InputError("field 'name' must be a string");
    spec.name = doc["name"].get<std::string>();
    if (doc.contains("scale")) spec.scale = read_integer<std::int64_t>(doc["scale"], "scale");
    if (spec.scale < 1) throw InputError("field 'scale' must be positive");
  } else {
    const json& g = doc["gram"];
    if (!g.is_array() || g.empty()) throw InputError("field 'gram' must be a nonempty array of rows");
    for (const auto& row : g) {
      if (!row.is_array()) throw InputError("field 'gram' must be an array of rows");
      std::vector<std::int64_t> r;
      for (const auto& x : row) r.push_back(read_integer<std::int64_t>(x, "gram"));
      spec.gram.push_back(std::move(r));
    }
    if (doc.contains("rank") && read_integer<std::size_t>(doc["rank"], "rank") != spec.gram.size())
      throw InputError("field 'rank' does not match the Gram matrix");
  }
  if (doc.contains("n_max")) {
    spec.n_max = read_integer<int>(doc["n_max"], "n_max");
    if (*spec.n_max < 1) throw InputError("field 'n_max' must be >= 1");
  }
  if (doc.contains("seed")) spec.seed = read_integer<std::uint64_t>(doc["seed"], "seed");
  return spec;
}

Lattice build_lattice(const LatticeSpec& spec) {
  try {
    if (spec.name) return named_lattice(*spec.name, spec.scale);
    return Lattice(spec.gram);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

int default_n_max(const Lattice& lattice) {
  const int by_rank = lattice.rank() == 1 ? 5 : lattice.rank() == 2 ? 4 : 3;
  return std::max(by_rank, default_weight_cutoff(phi_set(lattice)));
}

// ---------------------------------------------------------------- json helpers

namespace {

ordered_json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

ordered_json vector_json(const LatticeVector& v) { return v.coords; }

ordered_json rational_row_json(const RationalVector& row) {
  ordered_json out = ordered_json::array();
  for (const auto& q : row) out.push_back(rational_json(q));
  return out;
}

ordered_json claim(const std::string& name, bool pass, ordered_json detail = ordered_json::object()) {
  ordered_json c;
  c["claim"] = name;
  c["pass"] = pass;
  c["detail"] = std::move(detail);
  return c;
}

class Timer {
 public:
  explicit Timer(bool enabled) : enabled_(enabled) {}
  void mark(const std::string& label) {
    if (!enabled_) return;
    auto now = std::chrono::steady_clock::now();
    entries_[label] = std::chrono::duration<double>(now - last_).count();
    last_ = now;
  }
  void attach(ordered_json& doc) const {
    if (enabled_) doc["timings"] = entries_;
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  ordered_json entries_ = ordered_json::object();
};

struct Session {
  Lattice lattice;
  int n_max;
  std::uint64_t seed;
  ordered_json doc;
};

Session open_session(const std::string& command, const LatticeSpec& spec, const CommandOptions& options) {
  Lattice lattice = build_lattice(spec);
  const int n_max = options.n_max ? *options.n_max : spec.n_max ? *spec.n_max : default_n_max(lattice);
  if (n_max < 1) throw InputError("n_max must be >= 1");
  const std::uint64_t seed = spec.seed && options.seed == 0 ? *spec.seed : options.seed;
  ordered_json doc;
  doc["command"] = command;
  ordered_json echo;
  if (spec.name) {
    echo["name"] = *spec.name;
    echo["scale"] = spec.scale;
  }
  echo["rank"] = lattice.rank();
  echo["gram"] = lattice.gram();
  doc["lattice"] = echo;
  doc["options"] = {{"n_max", n_max}, {"seed", seed}};
  return Session{std::move(lattice), n_max, seed, std::move(doc)};
}

// points of norm <= bound expected in the lattice, used only to decide whether
// the definitional Phi search is affordable
double approximate_ball_count(const Lattice& lattice, std::int64_t bound) {
  const double n = static_cast<double>(lattice.rank());
  const double volume = std::pow(std::numbers::pi * static_cast<double>(bound), n / 2) / std::tgamma(n / 2 + 1);
  return volume / std::sqrt(lattice.determinant().get_d());
}

ordered_json phi_claims(const Lattice& lattice, const PhiReport& report, const LatticeSpec& spec) {
  ordered_json claims = ordered_json::array();
  const std::set<LatticeVector> phi(report.phi.begin(), report.phi.end());

  bool negation = true;
  for (const auto& a : report.phi) negation = negation && phi.contains(-a);
  claims.push_back(claim("phi_negation_closed", negation));

  bool multiples = true;
  for (const auto& a : report.phi)
    for (std::int64_t k : {-3, -2, 2, 3}) multiples = multiples && !phi.contains(k * a);
  claims.push_back(claim("phi_excludes_multiples", multiples, {{"multipliers", {-3, -2, 2, 3}}}));

  bool pairing = true;
  for (const auto& a : report.phi)
    for (const auto& b : report.phi)
      if (a != b && lattice.inner(a, b) >= lattice.norm(a)) pairing = false;
  claims.push_back(claim("phi_pairing_bound", pairing));

  claims.push_back(claim("phi_spans_lattice", report.spans_lattice));

  const std::int64_t min_norm = minimal_norm(lattice);
  bool shell_inside = true;
  for (const auto& v : shell(lattice, min_norm)) shell_inside = shell_inside && phi.contains(v);
  claims.push_back(claim("minimal_shell_in_phi", shell_inside, {{"minimal_norm", min_norm}}));

  if (spec.name) {
    auto s = shell(lattice, 2 * spec.scale);
    const bool equal = std::set<LatticeVector>(s.begin(), s.end()) == phi;
    claims.push_back(claim("root_lattice_phi_is_shell", equal, {{"shell_norm", 2 * spec.scale}, {"shell_size", s.size()}}));
  }

  if (approximate_ball_count(lattice, report.enumeration_bound) <= 20000) {
    const PhiReport by_definition = phi_set_by_definition(lattice);
    claims.push_back(claim("phi_definition_agrees", by_definition.phi == report.phi,
                           {{"enumeration_bound", report.enumeration_bound}}));
  }
  return claims;
}

bool all_pass(const ordered_json& claims) {
  for (const auto& c : claims)
    if (!c["pass"].get<bool>()) return false;
  return true;
}

ordered_json generator_json(const Generator& g) {
  ordered_json out;
  out["label"] = g.label;
  out["weight"] = g.weight;
  out["vector"] = to_string(g.vector);
  return out;
}

// Random homogeneous vector of the given weight: up to three basis monomials with small coefficients.
GradedVector random_vector(std::mt19937_64& rng, const GradedPiece& piece) {
  GradedVector v;
  while (v.is_zero()) {
    const std::size_t terms = 1 + rng() % std::min<std::size_t>(3, piece.dim());
    for (std::size_t t = 0; t < terms; ++t) {
      static constexpr int coeffs[] = {-2, -1, 1, 2};
      v.add(piece.basis()[rng() % piece.dim()], coeffs[rng() % 4]);
    }
  }
  return v;
}

}  // namespace

// ---------------------------------------------------------------- commands

Report cmd_phi(const LatticeSpec& spec, const CommandOptions& options) {
  Session s = open_session("phi", spec, options);
  Timer timer(options.timings);
  const PhiReport report = phi_set(s.lattice);
  timer.mark("phi");
  ordered_json results;
  results["count"] = report.phi.size();
  ordered_json hist = ordered_json::object();
  for (const auto& [norm, count] : report.norm_histogram) hist[std::to_string(norm)] = count;
  results["norm_histogram"] = hist;
  results["enumeration_bound"] = report.enumeration_bound;
  results["spans_lattice"] = report.spans_lattice;
  ordered_json vectors = ordered_json::array();
  for (const auto& a : report.phi) vectors.push_back(vector_json(a));
  results["phi"] = vectors;
  results["checks"] = phi_claims(s.lattice, report, spec);
  timer.mark("checks");
  Report out{std::move(s.doc), all_pass(results["checks"])};
  out.doc["results"] = std::move(results);
  out.doc["ok"] = out.ok;
  timer.attach(out.doc);
  return out;
}

Report cmd_qdims(const LatticeSpec& spec, const CommandOptions& options) {
  Session s = open_session("qdims", spec, options);
  Timer timer(options.timings);
  VoaContext ctx(s.lattice);
  ordered_json rows = ordered_json::array();
  bool ok = true;
  for (int n = 1; n <= s.n_max; ++n) {
    const std::size_t dim = ctx.piece(n).dim();
    const std::size_t c1 = ctx.c1(n).rank();
    const std::size_t predicted = predicted_q_dim(s.lattice, ctx.phi(), n);
    ok = ok && dim - c1 == predicted;
    rows.push_back({{"n", n}, {"dim_V", dim}, {"dim_C1", c1}, {"dim_Q", dim - c1}, {"predicted_dim_Q", predicted}});
  }
  timer.mark("qdims");
  Report out{std::move(s.doc), ok};
  std::vector<std::size_t> q;
  for (const auto& r : rows) q.push_back(r["dim_Q"].get<std::size_t>());
  out.doc["results"] = {{"q_dims", q}, {"table", rows}};
  out.doc["ok"] = ok;
  timer.attach(out.doc);
  return out;
}

Report cmd_genspace(const LatticeSpec& spec, const CommandOptions& options) {
  Session s = open_session("genspace", spec, options);
  Timer timer(options.timings);
  VoaContext ctx(s.lattice);
  ordered_json results;
  bool ok = true;
  try {
    auto complement = complement_basis(ctx, s.n_max);
    GeneratorBasis gens = order_basis(s.lattice, complement);
    timer.mark("complement");
    ordered_json list = ordered_json::array();
    for (const auto& g : gens) list.push_back(generator_json(g));
    results["generators"] = list;
    MinimalityReport minimal = minimality_check(ctx, gens, s.n_max);
    timer.mark("minimality");
    ordered_json entries = ordered_json::array();
    for (const auto& e : minimal.entries)
      entries.push_back({{"removed", gens[e.removed].label},
                         {"weight", e.weight},
                         {"rank", e.rank},
                         {"dim", e.dim},
                         {"breaks_spanning", e.breaks_spanning}});
    results["minimality"] = {{"minimal", minimal.minimal}, {"entries", entries}};
    ok = minimal.minimal;
  } catch (const ComplementMismatch& e) {
    results["complement_error"] = e.what();
    ok = false;
  }
  Report out{std::move(s.doc), ok};
  out.doc["results"] = std::move(results);
  out.doc["ok"] = ok;
  timer.attach(out.doc);
  return out;
}

Report cmd_verify(const LatticeSpec& spec, const CommandOptions& options) {
  Session s = open_session("verify", spec, options);
  Timer timer(options.timings);
  VoaContext ctx(s.lattice);
  ModeEngine& engine = ctx.engine();
  ordered_json claims = phi_claims(s.lattice, ctx.phi(), spec);
  timer.mark("phi");

  for (int n = 1; n <= s.n_max; ++n) {
    const SubspaceBasis& brute = ctx.c1(n);
    const SubspaceBasis closed = c1_closedform(ctx, n);
    claims.push_back(claim("c1_equals_closed_form", brute == closed, {{"n", n}, {"rank", brute.rank()}}));
  }
  timer.mark("c1");
  for (int n = 1; n <= s.n_max; ++n) {
    const SubspaceBasis c2 = c2_subspace(ctx, n);
    claims.push_back(claim("c2_in_c1", ctx.c1(n).space.contains(c2.space), {{"n", n}, {"dim_C2", c2.rank()}}));
  }
  timer.mark("c2");
  for (int n = 1; n <= s.n_max; ++n) {
    const std::size_t q = ctx.piece(n).dim() - ctx.c1(n).rank();
    const std::size_t predicted = predicted_q_dim(s.lattice, ctx.phi(), n);
    claims.push_back(claim("q_dim_matches_phi", q == predicted, {{"n", n}, {"dim_Q", q}, {"predicted", predicted}}));
  }

  GeneratorBasis gens;
  try {
    gens = order_basis(s.lattice, complement_basis(ctx, s.n_max));
    claims.push_back(claim("complement", true, {{"generators", gens.size()}}));
  } catch (const ComplementMismatch& e) {
    claims.push_back(claim("complement", false, {{"error", e.what()}}));
  }
  timer.mark("complement");

  if (!gens.empty()) {
    for (int n = 1; n <= s.n_max; ++n) {
      SpanningResult r = spanning_check(ctx, gens, n);
      claims.push_back(claim("standard_monomials_span", r.spans,
                             {{"n", n}, {"rank", r.rank}, {"dim", r.dim}, {"monomials", r.monomials}}));
    }
    timer.mark("spanning");
    MinimalityReport minimal = minimality_check(ctx, gens, s.n_max);
    claims.push_back(claim("generators_minimal", minimal.minimal, {{"generators_checked", minimal.entries.size()}}));
    timer.mark("minimality");
  }

  {
    std::mt19937_64 rng(s.seed);
    const int top_uv = std::min(3, s.n_max);
    const int top_w = std::min(4, s.n_max);
    std::size_t passed = 0;
    ordered_json failures = ordered_json::array();
    for (int t = 0; t < options.samples; ++t) {
      const int wu = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(top_uv));
      const int wv = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(top_uv));
      const int ww = static_cast<int>(rng() % static_cast<std::uint64_t>(top_w + 1));
      GradedVector u = random_vector(rng, ctx.piece(wu));
      GradedVector v = random_vector(rng, ctx.piece(wv));
      const auto& wbasis = ctx.piece(ww).basis();
      GradedVector w(wbasis[rng() % wbasis.size()]);
      const int m = static_cast<int>(rng() % 9) - 4;
      const int n = static_cast<int>(rng() % 9) - 4;
      if (commutator_holds(engine, u, m, v, n, w))
        ++passed;
      else
        failures.push_back({{"u", to_string(u)}, {"m", m}, {"v", to_string(v)}, {"n", n}, {"w", to_string(w)}});
    }
    claims.push_back(claim("commutator_formula", failures.empty(),
                           {{"samples", options.samples}, {"passed", passed}, {"failures", failures}}));
  }
  timer.mark("commutator");

  {
    const GradedVector omega = engine.omega();
    std::size_t checked = 0;
    bool ok = true;
    for (int n = 0; n <= std::min(4, s.n_max); ++n)
      for (const auto& b : ctx.piece(n).basis()) {
        const GradedVector v(b);
        ok = ok && engine.general_mode(omega, 1, v) == engine.virasoro_L0(v);
        ok = ok && engine.general_mode(omega, 0, v) == engine.virasoro_Lm1(v);
        ++checked;
      }
    claims.push_back(claim("virasoro_modes", ok, {{"vectors", checked}}));
  }
  timer.mark("virasoro");

  {
    const auto points = enumerate_up_to_norm(s.lattice, 4);
    bool ok = true;
    std::size_t pairs = 0;
    for (const auto& a : points)
      for (const auto& b : points) {
        ++pairs;
        const GradedVector eb{FockMonomial(b)};
        const int pairing = static_cast<int>(s.lattice.inner(a, b));
        const FockMonomial sum(a + b);
        for (int n = -pairing - 4; n <= -pairing + 1; ++n) {
          const GradedVector r = engine.lattice_mode(a, n, eb);
          if (n >= -pairing) {
            ok = ok && r.is_zero();
          } else if (n == -1 - pairing) {
            ok = ok && r == GradedVector(sum, Rational(ctx.cocycle()(a, b)));
          } else {
            for (const auto& [mono, c] : r.terms()) ok = ok && mono.point == sum.point && !mono.parts.empty();
            ok = ok && (a.is_zero() || !r.is_zero());
          }
        }
      }
    claims.push_back(claim("lattice_products", ok, {{"pairs", pairs}}));
  }
  timer.mark("lattice_products");

  {
    // [h(m), iota(e_alpha)_n] = <alpha, h> iota(e_alpha)_{m+n} on low-weight operands
    bool ok = true;
    std::size_t cases = 0;
    for (const auto& a : enumerate_up_to_norm(s.lattice, 4)) {
      const auto pairing = s.lattice.dual(a);
      for (std::size_t c = 0; c < s.lattice.rank(); ++c)
        for (int w = 0; w <= std::min(2, s.n_max); ++w)
          for (const auto& b : ctx.piece(w).basis())
            for (int m = -2; m <= 2; ++m)
              for (int n = -2; n <= 1; ++n) {
                const GradedVector v(b);
                const GradedVector lhs =
                    engine.heis_mode(c, m, engine.lattice_mode(a, n, v)) - engine.lattice_mode(a, n, engine.heis_mode(c, m, v));
                ok = ok && lhs == make_rational(pairing[c]) * engine.lattice_mode(a, m + n, v);
                ++cases;
              }
    }
    claims.push_back(claim("heisenberg_lattice_bracket", ok, {{"cases", cases}}));
  }
  timer.mark("heisenberg_lattice_bracket");

  {
    // u_{-r} v lies in C1 for r >= 1 and u, v of positive weight
    bool ok = true;
    std::size_t cases = 0;
    for (int p = 1; p <= s.n_max; ++p)
      for (int q = 1; p + q <= s.n_max; ++q)
        for (int r = 1; p + q + r - 1 <= s.n_max; ++r) {
          const int n = p + q + r - 1;
          for (const auto& u : ctx.piece(p).basis())
            for (const auto& v : ctx.piece(q).basis()) {
              if (cases >= 400) break;
              const GradedVector w = engine.general_mode(GradedVector(u), -r, GradedVector(v));
              if (!w.is_zero()) ok = ok && ctx.c1(n).space.contains(ctx.piece(n).coordinates(w));
              ++cases;
            }
        }
    claims.push_back(claim("negative_modes_in_c1", ok, {{"cases", cases}}));
  }
  timer.mark("negative_modes");

  if (!gens.empty()) {
    try {
      GeneratorBasis full = generating_basis(ctx);
      LieTable t = compute_lie_table(ctx, full);
      auto diffs = closed_form_mismatches(ctx, full, t);
      claims.push_back(claim("bracket_closed_forms", diffs.empty(), {{"mismatches", diffs}}));
      claims.push_back(claim("bracket_antisymmetric", is_antisymmetric(t)));
      claims.push_back(claim("bracket_jacobi", satisfies_jacobi(t)));
    } catch (const ComplementMismatch& e) {
      claims.push_back(claim("bracket_closed_forms", false, {{"error", e.what()}}));
    }
    timer.mark("lie");
  }

  const bool ok = all_pass(claims);
  Report out{std::move(s.doc), ok};
  out.doc["results"] = {{"checks", claims}};
  out.doc["ok"] = ok;
  timer.attach(out.doc);
  return out;
}

Report cmd_lie(const LatticeSpec& spec, const CommandOptions& options) {
  Session s = open_session("lie", spec, options);
  Timer timer(options.timings);
  VoaContext ctx(s.lattice);
  ordered_json results;
  bool ok = true;
  try {
    GeneratorBasis gens = generating_basis(ctx);
    LieTable t = compute_lie_table(ctx, gens);
    timer.mark("table");
    results["basis"] = t.basis_labels;
    ordered_json entries = ordered_json::array();
    for (std::size_t i = 0; i < t.dim; ++i)
      for (std::size_t j = 0; j < t.dim; ++j) {
        if (std::all_of(t.brackets[i][j].begin(), t.brackets[i][j].end(), [](const Rational& q) { return is_zero(q); }))
          continue;
        entries.push_back({{"left", t.basis_labels[i]}, {"right", t.basis_labels[j]},
                           {"coordinates", rational_row_json(t.brackets[i][j])}});
      }
    results["brackets"] = entries;
    KillingResult k = killing_radical(t);
    ordered_json killing = ordered_json::array();
    for (const auto& row : k.killing) killing.push_back(rational_row_json(row));
    ordered_json kernel = ordered_json::array();
    for (const auto& row : k.kernel) kernel.push_back(rational_row_json(row));
    results["killing"] = killing;
    results["radical_kernel"] = kernel;
    results["semisimple"] = k.kernel.empty();
    auto diffs = closed_form_mismatches(ctx, gens, t);
    ordered_json checks = ordered_json::array();
    checks.push_back(claim("bracket_closed_forms", diffs.empty(), {{"mismatches", diffs}}));
    checks.push_back(claim("bracket_antisymmetric", is_antisymmetric(t)));
    checks.push_back(claim("bracket_jacobi", satisfies_jacobi(t)));
    results["checks"] = checks;
    ok = all_pass(checks);
    timer.mark("checks");
  } catch (const ComplementMismatch& e) {
    results["complement_error"] = e.what();
    ok = false;
  }
  Report out{std::move(s.doc), ok};
  out.doc["results"] = std::move(results);
  out.doc["ok"] = ok;
  timer.attach(out.doc);
  return out;
}

Report run_command(const std::string& command, const LatticeSpec& spec, const CommandOptions& options) {
  if (command == "phi") return cmd_phi(spec, options);
  if (command == "qdims") return cmd_qdims(spec, options);
  if (command == "genspace") return cmd_genspace(spec, options);
  if (command == "verify") return cmd_verify(spec, options);
  if (command == "lie") return cmd_lie(spec, options);
  throw InputError("unknown command '" + command + "'");
}

// ---------------------------------------------------------------- output

namespace {

void flatten(const ordered_json& node, const std::string& path, std::ostringstream& out) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it)
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (node.is_array()) {
    if (node.empty()) out << path << "\t[]\n";
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "." + std::to_string(i), out);
  } else {
    out << path << '\t' << (node.is_string() ? node.get<std::string>() : node.dump()) << '\n';
  }
}

}  // namespace

std::string render(const ordered_json& doc, OutputFormat format) {
  if (format == OutputFormat::json) return doc.dump(2) + "\n";
  std::ostringstream out;
  flatten(doc, "", out);
  return out.str();
}

ordered_json error_document(const std::string& type, const std::string& message) {
  ordered_json doc;
  doc["error"] = {{"type", type}, {"message", message}};
  return doc;
}

}  // namespace vlpbw
