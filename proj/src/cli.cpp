#include "gem/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "gem/canonical.hpp"
#include "gem/catalog.hpp"
#include "gem/io.hpp"
#include "gem/moves.hpp"
#include "gem/residues.hpp"
#include "gem/tensor_model.hpp"

namespace gem {

using ojson = nlohmann::ordered_json;

namespace {

ojson half_json(HalfInt h) {
  if (h.integral()) return h.value();
  return h.str();
}

ojson colors_json(ColorSet s) { return s.colors(); }

ojson dipole_json(const Dipole& dp) {
  return {{"u", dp.u}, {"v", dp.v}, {"colors", colors_json(dp.colors)}, {"size", dp.size()}};
}

ojson moves_json(const std::vector<Dipole>& moves, const ColoredGraph* start) {
  ojson arr = ojson::array();
  std::optional<ColoredGraph> cur;
  if (start) cur = *start;
  for (const auto& m : moves) {
    ojson j = dipole_json(m);
    if (cur) {
      cur = eliminate_dipole(*cur, m);
      j["result"] = to_census_line(*cur);
    }
    arr.push_back(j);
  }
  return arr;
}

ojson identity_json(const IdentityRecord& r) {
  ojson j = {{"lhs", half_json(r.lhs)}, {"rhs", half_json(r.rhs)}, {"pass", r.pass}};
  if (!r.condition.empty()) {
    j["applicable"] = r.applicable;
    j["condition"] = r.condition;
  }
  return j;
}

ColoredGraph load_graph(const std::string& path) { return ColoredGraph(read_graph_data(path)); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json load_json(const std::string& path) {
  try {
    return nlohmann::json::parse(slurp(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": malformed JSON: " + e.what());
  }
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("bad index '" + item + "'");
    }
  }
  return out;
}

}  // namespace

ojson invariant_report_json(const InvariantReport& r) {
  ojson j;
  j["gurau_degree"] = half_json(r.omega());
  j["gurau_degree_x2"] = r.gurau_degree_x2;
  j["regular_genus_x2"] = r.regular_genus_x2;
  ojson jackets = ojson::array();
  for (const auto& jk : r.jackets) jackets.push_back({{"cycle", jk.cycle}, {"euler", jk.euler_char}, {"genus_x2", jk.genus_x2}});
  j["jackets"] = jackets;
  ojson ids = ojson::object();
  for (const auto& [name, rec] : r.identities) ids[name] = identity_json(rec);
  j["identities"] = ids;
  return j;
}

ojson cert_json(const CertStatus& s) {
  ojson j;
  j["status"] = to_string(s.status);
  j["witness"] = s.witness_kind;
  j["detail"] = s.detail;
  if (!s.moves.empty()) j["moves"] = moves_json(s.moves, nullptr);
  if (s.jacket) j["jacket"] = *s.jacket;
  if (s.value) j["value"] = *s.value;
  if (s.residue) j["residue"] = to_gem_json(*s.residue);
  if (s.residue_colors) j["residue_colors"] = colors_json(*s.residue_colors);
  return j;
}

ojson info_json(const ColoredGraph& g) {
  if (!is_connected(g)) throw Error("info: graph is disconnected");
  const int d = g.dimension();
  const ResidueCensus census(g);
  ojson j;
  j["dimension"] = d;
  j["vertices"] = g.order();
  j["canonical"] = canonical_form(g).text();
  j["bipartite"] = is_bipartite(g).bipartite;
  j["crystallization"] = census.sum_hats() == d + 1;

  ojson pairs = ojson::object();
  for (int a = 0; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b) pairs[std::to_string(a) + "," + std::to_string(b)] = census.g_pair(a, b);
  ojson hats = ojson::array();
  for (int i = 0; i <= d; ++i) hats.push_back(census.g_hat(i));
  j["residues"] = {{"g_pairs", pairs}, {"g_hats", hats}};

  auto report = gurau_degree(g);
  if (d >= 2) {
    const auto gr = gurau_ryan_check(g);
    report.identities.emplace(gr.name, gr);
  }
  if (d == 3)
    for (const auto& rec : dim3_identity(g)) report.identities.emplace(rec.name, rec);
  if (d == 4)
    for (const auto& rec : dim4_identities(g)) report.identities.emplace(rec.name, rec);
  const ojson inv = invariant_report_json(report);
  for (auto it = inv.begin(); it != inv.end(); ++it) j[it.key()] = it.value();

  const auto gem = certify_gem(g);
  const auto sphere = certify_sphere(g);
  if (d == 3 && census.sum_hats() == 4 && gem.yes()) {
    const auto gap = genus_gap_dim3(g);
    j["genus_gap"] = {{"gap", half_json(gap.gap)},
                      {"predicted", gap.predicted},
                      {"pass", gap.pass},
                      {"equality_case", gap.equality_case}};
  }
  j["face_vector"] = face_vector(g).counts;
  j["euler"] = euler_characteristic(g);

  ojson cert;
  cert["gem"] = cert_json(gem);
  cert["sphere"] = cert_json(sphere);
  if (!sphere.moves.empty()) cert["sphere"]["moves"] = moves_json(sphere.moves, &g);
  std::optional<CertStatus> s4;
  if (d == 4) {
    s4 = certify_singular4(g);
    cert["singular4"] = cert_json(*s4);
  }
  j["certification"] = cert;
  if (g.order() <= 32) j["automorphisms"] = automorphism_count(g);

  auto record = make_record(g);
  record.gem = gem.status;
  record.sphere = sphere.status;
  if (s4) record.singular4 = s4->status;
  ojson hints = ojson::array();
  for (const auto* rule : classify_hints(record))
    hints.push_back({{"id", rule->id}, {"predicate", rule->predicate}, {"candidates", rule->candidates}});
  j["hints"] = hints;
  return j;
}

namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
};

void print(std::ostream& out, const ojson& j) { out << j.dump(2) << "\n"; }

int cmd_validate(Context& ctx, const std::string& path, bool text) {
  const auto report = validate(read_graph_data(path));
  if (text) {
    ctx.out << (report.ok() ? "valid\n" : report.summary() + "\n");
  } else {
    ojson v = ojson::array();
    for (const auto& x : report.violations) v.push_back({{"color", x.color}, {"vertex", x.vertex}, {"message", x.message}});
    print(ctx.out, {{"valid", report.ok()}, {"violations", v}});
  }
  if (!report.ok()) ctx.err << report.summary() << "\n";
  return report.ok() ? kExitOk : kExitFailure;
}

int cmd_info(Context& ctx, const std::string& path, bool text) {
  const auto j = info_json(load_graph(path));
  if (!text) {
    print(ctx.out, j);
    return kExitOk;
  }
  ctx.out << "dimension " << j["dimension"].get<int>() << ", vertices " << j["vertices"].get<int>() << "\n";
  ctx.out << "gurau degree " << j["gurau_degree"].dump() << ", regular genus x2 " << j["regular_genus_x2"].get<long long>() << "\n";
  ctx.out << "euler " << j["euler"].get<long long>() << ", sphere " << j["certification"]["sphere"]["status"].get<std::string>() << "\n";
  for (const auto& h : j["hints"]) ctx.out << "hint " << h["id"].get<std::string>() << "\n";
  return kExitOk;
}

int cmd_simplify(Context& ctx, const std::string& path, bool crystallize, int max_moves) {
  const auto g = load_graph(path);
  const SimplifyResult r =
      crystallize ? simplify_to_crystallization(g) : reduce_dipoles(g, max_moves > 0 ? max_moves : 10 * g.order());
  ojson j;
  j["order"] = r.graph.order();
  j["census_line"] = to_census_line(r.graph);
  j["graph"] = to_gem_json(r.graph);
  j["moves"] = moves_json(r.moves, &g);
  print(ctx.out, j);
  return kExitOk;
}

int cmd_consum(Context& ctx, const std::string& a, const std::string& b, int va, int vb) {
  const auto g = connected_sum(load_graph(a), va, load_graph(b), vb);
  print(ctx.out, to_gem_json(g));
  return kExitOk;
}

int cmd_dipoles(Context& ctx, const std::string& path) {
  ojson arr = ojson::array();
  for (const auto& dp : find_dipoles(load_graph(path))) arr.push_back(dipole_json(dp));
  print(ctx.out, arr);
  return kExitOk;
}

EnumerateOptions enum_options(int dim, int max_order, bool bip, bool cryst, bool disconnected, int budget) {
  EnumerateOptions o;
  o.dimension = dim;
  o.max_order = max_order;
  o.bipartite_only = bip;
  o.crystallizations_only = cryst;
  o.connected_only = !disconnected;
  if (budget > 0) o.order_budget = budget;
  return o;
}

int cmd_enumerate(Context& ctx, const EnumerateOptions& o, bool lines) {
  const auto records = enumerate(o);
  if (lines) {
    ctx.out << census_lines(records);
    return kExitOk;
  }
  ojson arr = ojson::array();
  for (const auto& r : records) arr.push_back(record_to_json(r));
  print(ctx.out, {{"dimension", o.dimension}, {"max_order", o.max_order}, {"count", records.size()}, {"records", arr}});
  return kExitOk;
}

int cmd_census(Context& ctx, const EnumerateOptions& o, const std::string& dir, bool report) {
  namespace fs = std::filesystem;
  const auto records = enumerate(o);
  const auto sweep = sweep_checks(records);
  const auto index = census_index(o, records, sweep);
  const std::string index_text = index.dump(2) + "\n";
  const fs::path index_path = fs::path(dir) / "index.json";
  const fs::path lines_path = fs::path(dir) / "graphs.txt";

  fs::create_directories(dir);
  write_file_atomic(lines_path.string(), census_lines(records));
  write_file_atomic(index_path.string(), index_text);
  int code = kExitOk;
  if (report) {
    ctx.out << index_text;
  } else {
    print(ctx.out, {{"dir", dir}, {"count", records.size()}, {"ok", sweep.ok()}});
  }
  if (!sweep.ok()) {
    for (const auto& f : sweep.failures) ctx.err << "check failed: " << f << "\n";
    code = kExitFailure;
  }
  return code;
}

Bubble builtin_bubble(const std::string& name, int d, int m) {
  if (name == "quadratic") return quadratic_bubble(d);
  if (name == "quartic") return quartic_bubble(d, m);
  throw Error("unknown builtin bubble '" + name + "' (expected quadratic or quartic)");
}

int cmd_wick(Context& ctx, const std::vector<std::string>& paths, const std::string& builtin, int d, int m,
             bool check_oracle, int max_p, bool text) {
  std::optional<Bubble> bubble;
  for (const auto& path : paths) {
    Bubble b = bubble_from_json(load_json(path));
    bubble = bubble ? product(*bubble, b) : b;
  }
  if (!builtin.empty()) {
    if (d <= 0) d = bubble ? bubble->d : 3;
    Bubble b = builtin_bubble(builtin, d, m);
    bubble = bubble ? product(*bubble, b) : b;
  }
  if (!bubble) throw ParseError("wick: give a bubble file or --builtin");
  if (d > 0 && bubble->d != d) throw NotABubble("not a bubble: expected " + std::to_string(d) + " colors");

  MeanOptions mo;
  if (max_p > 0) mo.max_half_order = max_p;
  const auto mean = gaussian_mean(*bubble, mo);
  ojson j;
  j["d"] = bubble->d;
  j["p"] = bubble->half_order();
  j["pairings"] = 0;
  ojson graphs = ojson::array();
  long long count = 0;
  for (const auto& sigma : pairings(*bubble)) {
    const auto f = feynman_graph(*bubble, sigma);
    graphs.push_back({{"pairing", sigma.black_of_white}, {"exponent", weight_exponent(f)}, {"connected", is_connected(f)}});
    ++count;
  }
  j["pairings"] = count;
  j["mean"] = mean.to_json();
  j["text"] = mean.str();
  j["graphs"] = graphs;
  int code = kExitOk;
  if (check_oracle) {
    ojson oracle = ojson::object();
    for (int n : {2, 3}) {
      const Rational poly = mean.evaluate(n);
      const Rational lit = literal_mean(*bubble, n);
      oracle[std::to_string(n)] = {{"polynomial", rational_str(poly)}, {"literal", rational_str(lit)}, {"pass", poly == lit}};
      if (poly != lit) code = kExitFailure;
    }
    j["oracle"] = oracle;
    if (code != kExitOk) ctx.err << "oracle mismatch\n";
  }
  if (text) {
    ctx.out << mean.str() << "\n";
  } else {
    print(ctx.out, j);
  }
  return code;
}

int cmd_wick_vector(Context& ctx, const std::string& cov_path, const std::string& indices, bool text) {
  const auto cov = covariance_from_json(load_json(cov_path));
  const auto idx = parse_index_list(indices);
  const auto r = wick_vector(idx, cov);
  if (text) {
    ctx.out << r.str() << " = " << rational_str(r.value) << "\n";
    return kExitOk;
  }
  ojson monos = ojson::array();
  for (const auto& [pairs, count] : r.monomials) {
    ojson ps = ojson::array();
    for (const auto& [a, b] : pairs) ps.push_back({a, b});
    monos.push_back({{"pairs", ps}, {"count", bigint_json(count)}});
  }
  print(ctx.out, {{"indices", idx}, {"monomials", monos}, {"text", r.str()}, {"value", rational_str(r.value)}});
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"Colored graphs, crystallizations and tensor-model Gaussian means"};
  app.name("gem");
  app.require_subcommand(1);
  app.fallthrough();
  std::function<int()> action;

  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  auto text = [&] { return format == "text"; };

  std::string path, path_b;
  auto* validate_cmd = app.add_subcommand("validate", "Check a graph file");
  validate_cmd->add_option("path", path)->required();
  validate_cmd->callback([&] { action = [&] { return cmd_validate(ctx, path, text()); }; });

  auto* info_cmd = app.add_subcommand("info", "Invariants, certifications and classification hints");
  info_cmd->add_option("path", path)->required();
  info_cmd->callback([&] { action = [&] { return cmd_info(ctx, path, text()); }; });

  bool crystallize = false;
  int max_moves = 0;
  auto* simplify_cmd = app.add_subcommand("simplify", "Eliminate dipoles");
  simplify_cmd->add_option("path", path)->required();
  simplify_cmd->add_flag("--to-crystallization", crystallize, "Only 1-dipoles, until every g_hat is 1");
  simplify_cmd->add_option("--max-moves", max_moves, "Move budget (default 10 per vertex)");
  simplify_cmd->callback([&] { action = [&] { return cmd_simplify(ctx, path, crystallize, max_moves); }; });

  int va = 0, vb = 0;
  auto* consum_cmd = app.add_subcommand("consum", "Graph connected sum");
  consum_cmd->add_option("a", path)->required();
  consum_cmd->add_option("b", path_b)->required();
  consum_cmd->add_option("--va", va, "Vertex of A")->required();
  consum_cmd->add_option("--vb", vb, "Vertex of B")->required();
  consum_cmd->callback([&] { action = [&] { return cmd_consum(ctx, path, path_b, va, vb); }; });

  auto* dipoles_cmd = app.add_subcommand("dipoles", "List dipoles");
  dipoles_cmd->add_option("path", path)->required();
  dipoles_cmd->callback([&] { action = [&] { return cmd_dipoles(ctx, path); }; });

  int dim = 3, max_order = 2, budget = 0;
  bool bip = false, cryst = false, disconnected = false, lines = false, report = false;
  std::string dir;
  auto add_enum_flags = [&](CLI::App* sub) {
    sub->add_option("--dim", dim, "Dimension d (2, 3 or 4)")->required();
    sub->add_option("--max-order", max_order, "Largest even order")->required();
    sub->add_flag("--bipartite", bip, "Bipartite graphs only");
    sub->add_flag("--crystallizations", cryst, "Graphs with every g_hat = 1 only");
    sub->add_flag("--include-disconnected", disconnected, "Keep disconnected graphs");
    sub->add_option("--budget", budget, "Override the order budget");
  };
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate graphs up to isomorphism");
  add_enum_flags(enumerate_cmd);
  enumerate_cmd->add_flag("--lines", lines, "Print census lines only");
  enumerate_cmd->callback([&] {
    action = [&] { return cmd_enumerate(ctx, enum_options(dim, max_order, bip, cryst, disconnected, budget), lines); };
  });

  auto* census_cmd = app.add_subcommand("census", "Write graphs.txt and index.json");
  add_enum_flags(census_cmd);
  census_cmd->add_option("--dir", dir, "Output directory")->required();
  census_cmd->add_flag("--report", report, "Print the index; exit 1 on any check failure");
  census_cmd->callback([&] {
    action = [&] {
      return cmd_census(ctx, enum_options(dim, max_order, bip, cryst, disconnected, budget), dir, report);
    };
  });

  std::vector<std::string> bubble_paths;
  std::string builtin;
  int wick_d = 0, m = 1, max_p = 0;
  bool check_oracle = false;
  auto* wick_cmd = app.add_subcommand("wick", "Gaussian mean of a tensor invariant");
  wick_cmd->add_option("bubbles", bubble_paths, "Bubble files (a product when several)");
  wick_cmd->add_option("--builtin", builtin, "quadratic or quartic");
  wick_cmd->add_option("--d", wick_d, "Number of bubble colors");
  wick_cmd->add_option("--m", m, "Exchanged color of the quartic bubble");
  wick_cmd->add_flag("--check-oracle", check_oracle, "Compare with literal index contraction at N = 2, 3");
  wick_cmd->add_option("--max-p", max_p, "Pairing budget (default 8)");
  wick_cmd->callback([&] {
    action = [&] { return cmd_wick(ctx, bubble_paths, builtin, wick_d, m, check_oracle, max_p, text()); };
  });

  std::string cov_path, indices;
  auto* wv_cmd = app.add_subcommand("wick-vector", "Gaussian moment of a vector variable");
  wv_cmd->add_option("--cov-inverse", cov_path, "JSON matrix of <x_i, x_j>")->required();
  wv_cmd->add_option("--indices", indices, "Comma-separated 1-based indices")->required();
  wv_cmd->callback([&] { action = [&] { return cmd_wick_vector(ctx, cov_path, indices, text()); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "gem: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    return action ? action() : kExitParse;
  } catch (const ParseError& e) {
    err << "gem: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvalidGraph& e) {
    err << "gem: invalid graph: " << e.report().summary() << "\n";
    return kExitFailure;
  } catch (const BudgetExceeded& e) {
    err << "gem: budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const OrderLimitExceeded& e) {
    err << "gem: budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "gem: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace gem
