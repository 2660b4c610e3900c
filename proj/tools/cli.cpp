#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sdc/code.hpp"
#include "sdc/equivalence.hpp"
#include "sdc/errors.hpp"
#include "sdc/fixtures.hpp"
#include "sdc/matrix_io.hpp"
#include "sdc/neighborhood.hpp"
#include "sdc/paper_checks.hpp"
#include "sdc/search.hpp"

namespace sdc::cli {

namespace {

using nlohmann::json;

/// A failed verification; reported with exit status 1.
struct CheckFailed {};

struct Common {
  bool json = false;
  unsigned threads = 1;
  unsigned cap = kDefaultEnumerationCap;

  EnumerationOptions enumeration() const { return {cap, threads}; }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.json, "One JSON record per line instead of text");
  sub->add_option("--threads", c.threads, "Threads for codeword enumeration")->check(CLI::Range(1u, 1024u));
  sub->add_option("--cap", c.cap, "Largest dimension enumerated exhaustively")->check(CLI::Range(1u, 40u));
}

struct Input {
  std::string label;
  BitMatrix matrix;
};

/// `-` reads standard input, `fixture:NAME` an embedded fixture, anything
/// else a file path.
Input load(const std::string& spec, std::istream& in) {
  if (spec == "-") return {"<stdin>", read_matrix(in)};
  if (spec.rfind("fixture:", 0) == 0) {
    const std::string name = spec.substr(8);
    return {name, fixture(name)};
  }
  std::ifstream file(spec);
  if (!file) throw std::invalid_argument("cannot open '" + spec + "'");
  try {
    return {spec, read_matrix(file)};
  } catch (const ParseError& e) {
    throw std::invalid_argument(spec + ": " + e.what());
  }
}

Input load_single(const std::string& path, const std::string& fixture_name, std::istream& in) {
  if (!path.empty() && !fixture_name.empty()) throw std::invalid_argument("give either an input file or --fixture, not both");
  if (!fixture_name.empty()) return {fixture_name, fixture(fixture_name)};
  if (path.empty()) throw std::invalid_argument("no input: give a file path, '-' for standard input, or --fixture NAME");
  return load(path, in);
}

std::pair<Input, Input> load_pair(const std::vector<std::string>& paths, const std::vector<std::string>& fixtures,
                                  std::istream& in) {
  if (!paths.empty() && !fixtures.empty())
    throw std::invalid_argument("give two positional inputs or --fixture twice, not a mix");
  if (paths.size() + fixtures.size() != 2) throw std::invalid_argument("exactly two inputs are required");
  if (paths.size() == 2 && paths[0] == "-" && paths[1] == "-")
    throw std::invalid_argument("standard input can supply only one of the two inputs");
  if (!fixtures.empty()) return {Input{fixtures[0], fixture(fixtures[0])}, Input{fixtures[1], fixture(fixtures[1])}};
  Input a = load(paths[0], in);
  Input b = load(paths[1], in);
  return {std::move(a), std::move(b)};
}

json rows_json(const BitMatrix& m) {
  json rows = json::array();
  for (const auto& r : m.rows()) rows.push_back(r.to_string());
  return rows;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write '" + path.string() + "'");
  f << text;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// info ----------------------------------------------------------------------

void cmd_info(const Input& input, const Common& common, std::ostream& out) {
  const LinearCode c = LinearCode::from_generator(input.matrix);
  const EnumerationOptions opts = common.enumeration();
  const WeightEnumerator we = weight_enumerator(c, opts);
  const std::size_t d = we.min_nonzero_weight();
  const CodeType t = classify(c);

  if (common.json) {
    json j;
    j["command"] = "info";
    j["input"] = input.label;
    j["n"] = c.n();
    j["k"] = c.k();
    j["d"] = c.k() ? json(d) : json(nullptr);
    j["self_orthogonal"] = is_self_orthogonal(c);
    j["self_dual"] = is_self_dual(c);
    j["type"] = to_string(t);
    json wej = json::array();
    for (std::size_t w = 0; w < we.counts.size(); ++w)
      if (we.counts[w]) wej.push_back({w, we.counts[w]});
    j["weight_enumerator"] = std::move(wej);
    out << j.dump() << '\n';
    return;
  }
  out << "input: " << input.label << '\n';
  out << "n=" << c.n() << " k=" << c.k() << " d=" << (c.k() ? std::to_string(d) : "none") << '\n';
  out << "self_orthogonal=" << yes_no(is_self_orthogonal(c)) << " self_dual=" << yes_no(is_self_dual(c))
      << " type=" << to_string(t) << '\n';
  out << "weight_enumerator:";
  for (std::size_t w = 0; w < we.counts.size(); ++w)
    if (we.counts[w]) out << ' ' << w << ':' << we.counts[w];
  out << '\n';
}

// dual ----------------------------------------------------------------------

void cmd_dual(const Input& input, const Common& common, bool spaced, const std::string& output, std::ostream& out) {
  const LinearCode c = dual(LinearCode::from_generator(input.matrix));
  if (!output.empty()) write_file(output, serialize_matrix(c.generator(), spaced));
  if (common.json) {
    json j;
    j["command"] = "dual";
    j["input"] = input.label;
    j["n"] = c.n();
    j["k"] = c.k();
    j["generator"] = rows_json(c.generator());
    out << j.dump() << '\n';
  } else if (output.empty()) {
    out << serialize_matrix(c.generator(), spaced);
  } else {
    out << "wrote (" << c.n() << "," << c.k() << ") dual generator to " << output << '\n';
  }
}

// neighborhood --------------------------------------------------------------

json theorem_json(const TheoremVerdict& v) {
  return json{{"verdict", to_string(v.verdict)},
              {"type1_d", v.type1_distance},
              {"type2_d", {v.type2_distances[0], v.type2_distances[1]}}};
}

void cmd_neighborhood(const Input& input, const Common& common, const std::string& out_dir, std::ostream& out) {
  const EnumerationOptions opts = common.enumeration();
  const LinearCode c = LinearCode::from_generator(input.matrix);
  const Neighborhood nb = neighborhood_of(c, opts);
  const TheoremVerdict nbt = verify_theorem_no_better_type1(nb);
  const TheoremVerdict d2 = verify_theorem_d2_coincide(nb);
  const ShadowRangeVerdict shadow = verify_shadow_weight_range(nb, opts);

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    write_file(std::filesystem::path(out_dir) / "c_max.txt", serialize_matrix(nb.c_max.generator()));
    for (std::size_t i = 0; i < nb.members.size(); ++i)
      write_file(std::filesystem::path(out_dir) / ("member" + std::to_string(i + 1) + ".txt"),
                 serialize_matrix(nb.members[i].code.generator()));
  }

  if (common.json) {
    json j;
    j["command"] = "neighborhood";
    j["input"] = input.label;
    j["n"] = nb.n();
    j["c_max_dimension"] = nb.c_max.k();
    json members = json::array();
    for (const auto& m : nb.members)
      members.push_back({{"type", to_string(m.type)},
                         {"d", m.distance},
                         {"representative", m.representative.to_string()},
                         {"representative_weight", m.representative.weight()},
                         {"is_input", m.code == c},
                         {"generator", rows_json(m.code.generator())}});
    j["members"] = std::move(members);
    json sh{{"verdict", to_string(shadow.verdict)}, {"d", shadow.d}, {"singly_even_count", shadow.singly_even_count}};
    sh["min_weight"] = shadow.min_weight ? json(*shadow.min_weight) : json(nullptr);
    sh["max_weight"] = shadow.max_weight ? json(*shadow.max_weight) : json(nullptr);
    j["verdicts"] = {{"no_better_type1", theorem_json(nbt)}, {"d2_coincide", theorem_json(d2)}, {"shadow_range", sh}};
    out << j.dump() << '\n';
  } else {
    out << "neighborhood of " << input.label << " (n=" << nb.n() << ", C_max dimension " << nb.c_max.k() << ")\n";
    for (std::size_t i = 0; i < nb.members.size(); ++i) {
      const auto& m = nb.members[i];
      out << "member " << i + 1 << ": type=" << to_string(m.type) << " d=" << m.distance
          << " coset representative weight=" << m.representative.weight() << (m.code == c ? " (input)" : "") << '\n';
      if (out_dir.empty()) out << serialize_matrix(m.code.generator());
    }
    out << "no-better-TypeI: " << to_string(nbt.verdict) << " (d(TypeI)=" << nbt.type1_distance << " <= max("
        << nbt.type2_distances[0] << ", " << nbt.type2_distances[1] << "))\n";
    out << "d2-coincide: " << to_string(d2.verdict) << " (d(TypeI)=" << d2.type1_distance << ", TypeII d "
        << d2.type2_distances[0] << " and " << d2.type2_distances[1] << ")\n";
    out << "shadow-range: " << to_string(shadow.verdict) << " (singly-even weights of C_max^perp in [";
    if (shadow.min_weight)
      out << *shadow.min_weight << ", " << *shadow.max_weight;
    else
      out << "none";
    out << "], d=" << shadow.d << ")\n";
    if (!out_dir.empty()) out << "wrote c_max.txt and member1..3.txt to " << out_dir << '\n';
  }
  if (nbt.verdict == Verdict::Fail || d2.verdict == Verdict::Fail || shadow.verdict == Verdict::Fail) throw CheckFailed{};
}

// neighbors / equivalent ----------------------------------------------------

void cmd_neighbors(const Input& a, const Input& b, const Common& common, std::ostream& out) {
  const LinearCode ca = LinearCode::from_generator(a.matrix);
  const LinearCode cb = LinearCode::from_generator(b.matrix);
  const bool nbrs = are_neighbors(ca, cb);
  const std::size_t dim = intersection(ca, cb).k();
  if (common.json) {
    out << json{{"command", "neighbors"}, {"inputs", {a.label, b.label}}, {"n", ca.n()},
                {"intersection_dimension", dim}, {"neighbors", nbrs}}
               .dump()
        << '\n';
  } else {
    out << a.label << " and " << b.label << ": intersection dimension " << dim << " (n/2 - 1 = " << ca.n() / 2 - 1
        << "), neighbors=" << yes_no(nbrs) << '\n';
  }
}

void cmd_equivalent(const Input& a, const Input& b, const Common& common, std::ostream& out) {
  const LinearCode ca = LinearCode::from_generator(a.matrix);
  const LinearCode cb = LinearCode::from_generator(b.matrix);
  const EquivalenceResult r = are_permutation_equivalent(ca, cb);
  json perm = nullptr;
  if (r.witness) {
    perm = json::array();
    for (auto img : r.witness->images()) perm.push_back(img + 1);
  }
  const char* method = r.rejected_by_weight_enumerator ? "weight-enumerator" : "search";
  if (common.json) {
    out << json{{"command", "equivalent"}, {"inputs", {a.label, b.label}}, {"equivalent", r.witness.has_value()},
                {"method", method}, {"search_nodes", r.search_nodes}, {"permutation", perm}}
               .dump()
        << '\n';
  } else {
    out << a.label << " and " << b.label << ": equivalent=" << yes_no(r.witness.has_value()) << " (" << method;
    if (!r.rejected_by_weight_enumerator) out << ", " << r.search_nodes << " search nodes";
    out << ")\n";
    if (r.witness) {
      out << "permutation (coordinate i -> image, 1-based):";
      for (auto img : r.witness->images()) out << ' ' << img + 1;
      out << '\n';
    }
  }
}

// verify-paper --------------------------------------------------------------

void cmd_verify(const Common& common, const std::string& fixtures_dir, std::ostream& out) {
  PaperCheckOptions opts;
  opts.enumeration = common.enumeration();
  if (!fixtures_dir.empty()) {
    for (const auto& name : fixture_names()) {
      const auto path = std::filesystem::path(fixtures_dir) / (name + ".txt");
      if (!std::filesystem::exists(path)) continue;
      std::ifstream f(path);
      try {
        opts.fixtures[name] = read_matrix(f);
      } catch (const ParseError& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
      }
    }
  }
  const auto results = run_paper_checks(opts);
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    if (common.json)
      out << json{{"check", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}}.dump() << '\n';
    else
      out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << ": " << r.detail << '\n';
  }
  if (!common.json) out << (all ? "all checks passed\n" : "some checks FAILED\n");
  if (!all) throw CheckFailed{};
}

// search --------------------------------------------------------------------

void cmd_search(SearchOptions s, const Common& common, bool report_best, const std::string& out_dir,
                std::ostream& out) {
  s.enumeration = common.enumeration();
  const SearchResult r = run_search(s);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    if (r.best_type1) write_file(std::filesystem::path(out_dir) / "best_type1.txt", serialize_matrix(r.best_type1->code.generator()));
    if (r.best_type2) write_file(std::filesystem::path(out_dir) / "best_type2.txt", serialize_matrix(r.best_type2->code.generator()));
  }
  if (common.json) {
    out << search_json(r, report_best) << '\n';
    return;
  }
  out << "search n=" << s.n << " steps=" << s.steps << " seed=" << s.seed << ": " << r.steps_taken << " steps taken"
      << (r.stopped_early ? " (stopped early)" : "") << ", " << r.type1_seen << " TypeI and " << r.type2_seen
      << " TypeII codes visited\n";
  auto line = [&](const char* label, const std::optional<SearchBest>& b, CodeType t) {
    out << "best " << label << ": ";
    if (!b) {
      out << "none seen (bound " << extremal_bound(s.n, t) << ")\n";
      return;
    }
    if (s.compute_distance)
      out << "d=" << b->distance;
    else
      out << "d not computed";
    out << " (bound " << extremal_bound(s.n, t) << ") first seen at step " << b->step << '\n';
    if (report_best) out << serialize_matrix(b->code.generator());
  };
  line("TypeI", r.best_type1, CodeType::TypeI);
  line("TypeII", r.best_type2, CodeType::TypeII);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binary self-dual codes: classification, neighborhoods and neighbor-walk search", "sdcode"};
  app.require_subcommand(1);

  Common common;
  std::string path, fixture_name, out_dir, output, fixtures_dir;
  std::vector<std::string> paths, fixtures;
  bool spaced = false, report_best = false, no_distance = false;
  SearchOptions search;
  std::size_t min_d = 0;

  auto* info = app.add_subcommand("info", "Print n, k, d, self-duality, type and weight enumerator");
  auto* dual_cmd = app.add_subcommand("dual", "Print the dual code's generator matrix");
  auto* nbhd = app.add_subcommand("neighborhood", "Build the neighborhood of a Type I code and check the theorems");
  for (auto* sub : {info, dual_cmd, nbhd}) {
    sub->add_option("input", path, "Matrix file, '-' for standard input, or fixture:NAME");
    sub->add_option("--fixture", fixture_name, "Embedded fixture G1..G6");
    add_common(sub, common);
  }
  dual_cmd->add_flag("--spaced", spaced, "Separate symbols with spaces");
  dual_cmd->add_option("-o,--output", output, "Write the matrix to this file");
  nbhd->add_option("--out-dir", out_dir, "Write c_max.txt and member1..3.txt here");

  auto* nbrs = app.add_subcommand("neighbors", "Test whether two self-dual codes are neighbors");
  auto* equiv = app.add_subcommand("equivalent", "Test two codes for permutation equivalence");
  for (auto* sub : {nbrs, equiv}) {
    sub->add_option("inputs", paths, "Two matrix files ('-' or fixture:NAME allowed)")->expected(0, 2);
    sub->add_option("--fixture", fixtures, "Embedded fixture; give twice")
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    add_common(sub, common);
  }

  auto* verify = app.add_subcommand("verify-paper", "Run every reproduction check; exit 1 if any fails");
  verify->add_option("--fixtures-dir", fixtures_dir, "Override fixtures with DIR/G1.txt .. DIR/G6.txt where present");
  add_common(verify, common);

  auto* srch = app.add_subcommand("search", "Seeded neighbor walk tracking the best distance per type");
  srch->add_option("--n", search.n, "Code length (multiple of 8)")->required();
  srch->add_option("--steps", search.steps, "Neighbor steps")->capture_default_str();
  srch->add_option("--seed", search.seed, "Walk seed")->capture_default_str();
  srch->add_option("--min-d", min_d, "Stop once a code with at least this distance is found");
  srch->add_flag("--report-best", report_best, "Include the best generator matrices in the output");
  srch->add_flag("--no-distance", no_distance, "Skip minimum-distance computation");
  srch->add_option("--out-dir", out_dir, "Write best_type1.txt / best_type2.txt here");
  add_common(srch, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (info->parsed()) {
      cmd_info(load_single(path, fixture_name, in), common, out);
    } else if (dual_cmd->parsed()) {
      cmd_dual(load_single(path, fixture_name, in), common, spaced, output, out);
    } else if (nbhd->parsed()) {
      cmd_neighborhood(load_single(path, fixture_name, in), common, out_dir, out);
    } else if (nbrs->parsed()) {
      auto [a, b] = load_pair(paths, fixtures, in);
      cmd_neighbors(a, b, common, out);
    } else if (equiv->parsed()) {
      auto [a, b] = load_pair(paths, fixtures, in);
      cmd_equivalent(a, b, common, out);
    } else if (verify->parsed()) {
      cmd_verify(common, fixtures_dir, out);
    } else if (srch->parsed()) {
      search.compute_distance = !no_distance;
      if (srch->count("--min-d")) search.min_distance = min_d;
      cmd_search(search, common, report_best, out_dir, out);
    }
  } catch (const CheckFailed&) {
    return kCheckFailed;
  } catch (const InternalInconsistency& e) {
    err << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kSuccess;
}

}  // namespace sdc::cli
