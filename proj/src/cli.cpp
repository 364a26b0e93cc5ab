// Copyright 2026 The qwc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwc/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "qwc/census.hpp"
#include "qwc/controllability.hpp"
#include "qwc/lie.hpp"
#include "qwc/qwalk.hpp"
#include "qwc/serialize.hpp"

namespace qwc {

namespace {

using nlohmann::json;

// ---- shared option plumbing -------------------------------------------

VertexSet parse_subset(const Graph& g, const std::string& text) {
  if (text == "all") return VertexSet::all(g.n());
  std::vector<int> members;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size())
      throw std::invalid_argument("bad vertex index '" + item + "'");
    members.push_back(v);
  }
  if (members.empty())
    throw std::invalid_argument("subset must be 'all' or a vertex list");
  return VertexSet::of(g.n(), members);
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

// Generic fallback renderer: "key: value" per top-level field, nested
// values as compact JSON. Keys come out sorted (nlohmann object order).
void print_plain(std::ostream& out, const json& doc) {
  for (const auto& [key, value] : doc.items()) {
    out << key << ": ";
    if (value.is_string())
      out << value.get<std::string>();
    else
      out << value.dump();
    out << "\n";
  }
}

std::string schedule_csv(const ControlSchedule& sched) {
  std::string text = "segment,s,t\n";
  for (int k = 0; k < sched.pairs(); ++k)
    text += std::to_string(k) + "," + format_double(sched.s(k)) + "," +
            format_double(sched.t(k)) + "\n";
  return text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

UnitaryMatrix builtin_target(const std::string& name, int n) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  if (name == "identity") {
    m.setIdentity();
  } else if (name == "shift") {
    for (int j = 0; j < n; ++j) m((j + 1) % n, j) = 1.0;
  } else if (name == "reverse") {
    for (int j = 0; j < n; ++j) m(n - 1 - j, j) = 1.0;
  } else {
    throw std::invalid_argument(
        "unknown target '" + name + "' (have: identity, shift, reverse)");
  }
  return UnitaryMatrix(std::move(m));
}

// Plain text target: dimension n, then n^2 lines "re im" in row-major
// order.
UnitaryMatrix target_from_file(const std::string& path, int expected_n) {
  std::istringstream in(read_file(path));
  int n = 0;
  if (!(in >> n) || n < 1)
    throw std::invalid_argument("target file must start with the dimension");
  if (n != expected_n)
    throw std::invalid_argument("target dimension " + std::to_string(n) +
                                " does not match the graph");
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double re = 0, im = 0;
      if (!(in >> re >> im))
        throw std::invalid_argument("target file ended early");
      m(i, j) = std::complex<double>(re, im);
    }
  return UnitaryMatrix(std::move(m));
}

// ---- per-command CSV views ----------------------------------------------

std::string check_csv(const json& doc) {
  std::string subset;
  for (const auto& v : doc["subset"]) {
    if (!subset.empty()) subset += ';';
    subset += std::to_string(v.get<int>());
  }
  auto opt = [&](const char* key) {
    return doc[key].is_null() ? std::string()
                              : std::to_string(doc[key].get<long>());
  };
  return "graph6,n,subset,controllable,det,rank,gcd_degree,spectral_rank,"
         "fixing_automorphisms\n" +
         doc["graph6"].get<std::string>() + "," +
         std::to_string(doc["n"].get<int>()) + "," + subset + "," +
         (doc["controllable"].get<bool>() ? "true" : "false") + "," +
         doc["det"].get<std::string>() + "," +
         std::to_string(doc["rank"].get<int>()) + "," + opt("gcd_degree") +
         "," + opt("spectral_rank") + "," + opt("fixing_automorphisms") +
         "\n";
}

std::string census_csv(const CensusResult& res) {
  std::string text;
  if (res.mode == SubsetMode::kAllOnes) {
    text = "n,connected,controllable,degree_sequence,count\n";
    for (const auto& [d, count] : res.degree_sequences)
      text += std::to_string(res.n) + "," +
              std::to_string(res.connected_total) + "," +
              std::to_string(res.controllable_count) + ",\"" +
              degree_sequence_key(d) + "\"," + std::to_string(count) + "\n";
    if (res.degree_sequences.empty())
      text += std::to_string(res.n) + "," +
              std::to_string(res.connected_total) + "," +
              std::to_string(res.controllable_count) + ",,0\n";
  } else {
    text = "graph6,n,controllable_vertices\n";
    for (const auto& row : res.singleton_rows) {
      std::string verts;
      for (int v : row.controllable_vertices) {
        if (!verts.empty()) verts += ';';
        verts += std::to_string(v);
      }
      text += row.graph6 + "," + std::to_string(res.n) + "," + verts + "\n";
    }
  }
  return text;
}

std::string walk_matrix_csv(const WalkMatrix& w) {
  std::string text;
  for (int i = 0; i < w.matrix.rows(); ++i) {
    for (int j = 0; j < w.matrix.cols(); ++j) {
      if (j) text += ',';
      text += to_decimal(w.matrix.at(i, j));
    }
    text += '\n';
  }
  return text;
}

std::string family_csv(const FamilyCheckReport& rep) {
  std::string text = "level,graph6,n,controllable,det\n";
  for (size_t i = 0; i < rep.levels.size(); ++i) {
    const auto& lvl = rep.levels[i];
    text += std::to_string(i) + "," + lvl.graph6 + "," +
            std::to_string(lvl.n) + "," +
            (lvl.controllable ? "true" : "false") + "," +
            to_decimal(lvl.det) + "\n";
  }
  return text;
}

// Emits the document in the chosen format: JSON (default), a
// command-specific CSV view, or flat plain text.
void emit(std::ostream& out, const std::string& format, const json& doc,
          const std::string& csv) {
  if (format == "csv")
    out << csv;
  else if (format == "plain")
    print_plain(out, doc);
  else
    out << doc.dump(2) << "\n";
}

struct CommonOpts {
  std::string format = "json";
  int jobs = 0;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"exact controllability of graph/vertex-subset pairs and "
               "alternating quantum-walk control"};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--format", common.format, "output format")
      ->transform(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();
  app.add_option("--jobs", common.jobs,
                 "parallel worker bound (0 = hardware default)");

  int exit_code = 0;

  // check ---------------------------------------------------------------
  auto* check = app.add_subcommand(
      "check", "decide controllability of a (graph, subset) pair");
  struct {
    std::string graph6, subset = "all";
  } check_opt;
  check->add_option("--graph", check_opt.graph6, "graph6 code")->required();
  check->add_option("--subset", check_opt.subset,
                    "comma-separated vertices or 'all'");
  check->callback([&] {
    Graph g = from_graph6(check_opt.graph6);
    ControllabilityReport rep = is_controllable(g, parse_subset(g, check_opt.subset));
    json doc = to_json(rep);
    emit(out, common.format, doc, check_csv(doc));
    exit_code = rep.controllable ? 0 : 2;
  });

  // census ----------------------------------------------------------------
  auto* census_cmd = app.add_subcommand(
      "census", "controllability statistics over all connected graphs");
  struct {
    int n = 0;
    std::string mode = "all-ones";
    std::string from_file;
    std::string graph6_out;
    bool force_large = false;
  } census_opt;
  census_cmd->add_option("--n", census_opt.n, "vertex count")->required();
  census_cmd->add_option("--mode", census_opt.mode, "subset mode")
      ->transform(CLI::IsMember({"all-ones", "every-singleton"}))
      ->capture_default_str();
  census_cmd->add_option("--from-file", census_opt.from_file,
                         "read graph6 lines instead of enumerating");
  census_cmd->add_option("--graph6-out", census_opt.graph6_out,
                         "write controllable graphs to this file");
  census_cmd->add_flag("--force-large", census_opt.force_large,
                       "allow n > 8 enumeration (slow)");
  census_cmd->callback([&] {
    SubsetMode mode = census_opt.mode == "all-ones"
                          ? SubsetMode::kAllOnes
                          : SubsetMode::kEverySingleton;
    CensusResult res;
    if (!census_opt.from_file.empty()) {
      std::vector<Graph> graphs =
          parse_graph6_lines(read_file(census_opt.from_file));
      res = census_from_graphs(graphs, census_opt.n, mode, common.jobs);
    } else {
      res = census(census_opt.n, mode, common.jobs, census_opt.force_large);
    }
    if (!census_opt.graph6_out.empty()) {
      std::string lines;
      for (const auto& g6 : res.controllable_graph6) lines += g6 + "\n";
      write_file(census_opt.graph6_out, lines);
    }
    emit(out, common.format, to_json(res), census_csv(res));
  });

  // walk-matrix -----------------------------------------------------------
  auto* wm = app.add_subcommand("walk-matrix",
                                "exact walk matrix of a pair");
  struct {
    std::string graph6, subset = "all";
  } wm_opt;
  wm->add_option("--graph", wm_opt.graph6, "graph6 code")->required();
  wm->add_option("--subset", wm_opt.subset,
                 "comma-separated vertices or 'all'");
  wm->callback([&] {
    Graph g = from_graph6(wm_opt.graph6);
    WalkMatrix w = walk_matrix(g, parse_subset(g, wm_opt.subset));
    emit(out, common.format, to_json(w), walk_matrix_csv(w));
    exit_code = w.determinant != 0 ? 0 : 2;
  });

  // charpoly ----------------------------------------------------------------
  auto* cp = app.add_subcommand(
      "charpoly", "characteristic polynomial of the adjacency matrix");
  struct {
    std::string graph6;
  } cp_opt;
  cp->add_option("--graph", cp_opt.graph6, "graph6 code")->required();
  cp->callback([&] {
    Graph g = from_graph6(cp_opt.graph6);
    IntPoly phi = characteristic_polynomial(g);
    json doc = charpoly_json(g, phi);
    std::string csv = "power,coefficient\n";
    for (int k = 0; k <= phi.degree(); ++k)
      csv += std::to_string(k) + "," + to_decimal(phi.coeff(k)) + "\n";
    emit(out, common.format, doc, csv);
  });

  // lie-dim --------------------------------------------------------------
  auto* lie = app.add_subcommand(
      "lie-dim", "closure dimensions of the pair's two Hamiltonians");
  struct {
    std::string graph6, subset = "all", mode = "auto";
  } lie_opt;
  lie->add_option("--graph", lie_opt.graph6, "graph6 code")->required();
  lie->add_option("--subset", lie_opt.subset,
                  "comma-separated vertices or 'all'");
  lie->add_option("--mode", lie_opt.mode, "arithmetic mode")
      ->transform(CLI::IsMember({"auto", "exact", "floating"}))
      ->capture_default_str();
  lie->callback([&] {
    Graph g = from_graph6(lie_opt.graph6);
    VertexSet s = parse_subset(g, lie_opt.subset);
    LieMode mode;
    if (lie_opt.mode == "exact")
      mode = LieMode::kExact;
    else if (lie_opt.mode == "floating")
      mode = LieMode::kFloating;
    else
      mode = g.n() <= 6 ? LieMode::kExact : LieMode::kFloating;
    SaturationReport rep = verify_saturation(g, s, mode);
    json doc = saturation_json(to_graph6(g), s, mode, rep);
    std::string csv =
        "graph6,n,mode,controllable,real_dim,skew_dim,saturation_holds\n" +
        to_graph6(g) + "," + std::to_string(rep.n) + "," +
        (mode == LieMode::kExact ? "exact" : "floating") + "," +
        (rep.controllable ? "true" : "false") + "," +
        std::to_string(rep.real_dim) + "," + std::to_string(rep.skew_dim) +
        "," + (rep.saturation_holds ? "true" : "false") + "\n";
    emit(out, common.format, doc, csv);
    exit_code = rep.saturation_holds ? 0 : 2;
  });

  // cone -----------------------------------------------------------------
  auto* cone_cmd = app.add_subcommand(
      "cone", "cone construction and its controllability implication");
  struct {
    std::string graph6;
    int vertex = 0;
  } cone_opt;
  cone_cmd->add_option("--graph", cone_opt.graph6, "graph6 code")->required();
  cone_cmd->add_option("--vertex", cone_opt.vertex, "cone base vertex")
      ->required();
  cone_cmd->callback([&] {
    Graph g = from_graph6(cone_opt.graph6);
    bool holds = cone_theorem_check(g, cone_opt.vertex);
    Graph hat = cone(g, VertexSet::single(g.n(), cone_opt.vertex));
    bool premise =
        walk_matrix(g, VertexSet::single(g.n(), cone_opt.vertex))
            .determinant != 0;
    bool conclusion =
        walk_matrix(hat, VertexSet::single(hat.n(), 0)).determinant != 0;
    json doc = cone_json(g, cone_opt.vertex, hat, premise, conclusion);
    std::string csv =
        "graph6,vertex,cone_graph6,premise_controllable,cone_controllable,"
        "implication_holds\n" +
        to_graph6(g) + "," + std::to_string(cone_opt.vertex) + "," +
        to_graph6(hat) + "," + (premise ? "true" : "false") + "," +
        (conclusion ? "true" : "false") + "," + (holds ? "true" : "false") +
        "\n";
    emit(out, common.format, doc, csv);
    exit_code = holds ? 0 : 2;
  });

  // attach-path -------------------------------------------------------------
  auto* ap = app.add_subcommand(
      "attach-path", "grow by joining a path end to the subset, testing "
                     "controllability at each level");
  struct {
    std::string graph6, subset = "all";
    int m = 1;
    int depth = 1;
  } ap_opt;
  ap->add_option("--graph", ap_opt.graph6, "graph6 code")->required();
  ap->add_option("--subset", ap_opt.subset,
                 "comma-separated vertices or 'all'");
  ap->add_option("--m", ap_opt.m, "attached path length")
      ->capture_default_str();
  ap->add_option("--depth", ap_opt.depth, "construction levels")
      ->capture_default_str();
  ap->callback([&] {
    Graph g = from_graph6(ap_opt.graph6);
    FamilyCheckReport rep =
        family_check(g, parse_subset(g, ap_opt.subset),
                     FamilyCheckReport::Construction::kAttachPath, ap_opt.m,
                     ap_opt.depth);
    emit(out, common.format, to_json(rep), family_csv(rep));
    exit_code = rep.all_controllable ? 0 : 2;
  });

  // synthesize ---------------------------------------------------------------
  auto* syn = app.add_subcommand(
      "synthesize", "approximate a target unitary by an alternating "
                    "adjacency/projector schedule");
  struct {
    std::string graph6, subset = "all";
    std::string target_file, target_name;
    std::string schedule_out;
    SynthesisConfig cfg;
  } syn_opt;
  syn->add_option("--graph", syn_opt.graph6, "graph6 code")->required();
  syn->add_option("--subset", syn_opt.subset,
                  "comma-separated vertices or 'all'");
  auto* tf = syn->add_option("--target-file", syn_opt.target_file,
                             "file: n then n^2 rows 're im'");
  syn->add_option("--target", syn_opt.target_name,
                  "built-in target: identity, shift, reverse")
      ->excludes(tf);
  syn->add_option("--segments", syn_opt.cfg.segment_pairs,
                  "segment pairs K")
      ->capture_default_str();
  syn->add_option("--restarts", syn_opt.cfg.restarts, "random restarts")
      ->capture_default_str();
  syn->add_option("--max-iterations", syn_opt.cfg.max_iterations,
                  "gradient steps per restart")
      ->capture_default_str();
  syn->add_option("--target-infidelity", syn_opt.cfg.target_infidelity,
                  "stop once below this")
      ->capture_default_str();
  syn->add_option("--seed", syn_opt.cfg.rng_seed, "restart RNG seed")
      ->capture_default_str();
  syn->add_option("--schedule-out", syn_opt.schedule_out,
                  "also write the schedule as CSV to this file");
  syn->callback([&] {
    Graph g = from_graph6(syn_opt.graph6);
    VertexSet s = parse_subset(g, syn_opt.subset);
    if (syn_opt.target_file.empty() && syn_opt.target_name.empty())
      throw std::invalid_argument("provide --target or --target-file");
    UnitaryMatrix target =
        !syn_opt.target_file.empty()
            ? target_from_file(syn_opt.target_file, g.n())
            : builtin_target(syn_opt.target_name, g.n());
    syn_opt.cfg.jobs = common.jobs;
    SynthesisResult res = synthesize(g, s, target, syn_opt.cfg);
    if (!res.pair_controllable)
      err << "warning: pair is not controllable; convergence is not "
             "expected\n";
    if (!syn_opt.schedule_out.empty())
      write_file(syn_opt.schedule_out, schedule_csv(res.schedule));
    emit(out, common.format, synthesis_json(g, s, syn_opt.cfg, res),
         schedule_csv(res.schedule));
    exit_code = res.reached_target ? 0 : 2;
  });

  // ------------------------------------------------------------------------
  // Let --format/--jobs appear after the subcommand name too.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("qwc");
  for (const auto& a : args) argv_store.push_back(a);
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace qwc
