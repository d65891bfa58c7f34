#include "tenjoin/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "tenjoin/closedform.hpp"
#include "tenjoin/cospectral.hpp"
#include "tenjoin/eigensolve.hpp"
#include "tenjoin/family.hpp"
#include "tenjoin/hgr.hpp"
#include "tenjoin/matrices.hpp"

namespace tenjoin {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

json poly_json(const RationalPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

void print_poly(std::ostream& out, const std::string& label, const RationalPoly& p) {
  out << label << ": " << p.str() << "\n";
  out << label << " coefficients (ascending):";
  for (const auto& c : p.coeffs()) out << " " << to_string(c);
  out << "\n";
}

void print_spectrum(std::ostream& out, const std::string& label, const std::vector<double>& s) {
  out << label << ":";
  for (double v : s) out << " " << fmt(v);
  out << "\n";
}

MatrixKind parse_kind(const std::string& name) {
  if (name == "adj") return MatrixKind::Adjacency;
  if (name == "lap") return MatrixKind::Laplacian;
  if (name == "nlap") return MatrixKind::NormalizedLaplacian;
  throw CLI::ValidationError("--matrix", "expected adj, lap or nlap");
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (...) {
      throw CLI::ValidationError("--classes", "expected a comma-separated list of sizes");
    }
    if (out.back() < 1) throw CLI::ValidationError("--classes", "sizes must be positive");
  }
  if (out.empty()) throw CLI::ValidationError("--classes", "no sizes given");
  return out;
}

WeightTable parse_weight_entries(const std::string& entries) {
  WeightTable w(1);
  std::stringstream ss(entries);
  std::string entry;
  while (std::getline(ss, entry, ',')) {
    if (entry.empty()) continue;
    auto eq = entry.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--wc", "expected <cardinality>=<weight>");
    try {
      int c = std::stoi(entry.substr(0, eq));
      w.set(c, parse_rational(entry.substr(eq + 1)));
    } catch (const std::exception& err) {
      throw CLI::ValidationError("--wc", err.what());
    }
  }
  return w;
}

std::vector<VertexSet> parse_members(const std::string& text) {
  std::vector<VertexSet> out;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    VertexSet member;
    std::stringstream ss(group);
    std::string item;
    while (std::getline(ss, item, ',')) member.push_back(std::stoi(item));
    if (!member.empty()) out.push_back(std::move(member));
  }
  return out;
}

struct FamilyOptions {
  std::string kind = "full";
  std::string b_list;
  int m = 0;
  int r = 1;
  std::string members;
  std::string pattern_path;
  bool allow_huge = false;
};

std::set<int> parse_b(const std::string& text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.insert(std::stoi(item));
  return out;
}

EdgeFamily build_family(const FamilyOptions& opts, const ClassSequence& cs) {
  if (opts.kind == "full") return family_full(cs, opts.allow_huge);
  if (opts.kind == "bspan") {
    if (opts.b_list.empty()) throw CLI::ValidationError("--b", "bspan needs cardinalities");
    return family_b_spanning(cs, parse_b(opts.b_list), opts.allow_huge);
  }
  if (opts.kind == "uniform") {
    if (opts.m < 2) throw CLI::ValidationError("--m", "uniform family needs a cardinality");
    return family_uniform_max(cs, opts.m, opts.allow_huge);
  }
  if (opts.kind == "aligned") return family_aligned(cs, opts.r);
  if (opts.kind == "identity") return family_identity(cs);
  if (opts.kind == "backbone") {
    if (opts.pattern_path.empty()) throw CLI::ValidationError("--pattern", "backbone family needs a pattern");
    return family_backbone(cs, load_hgr(opts.pattern_path).hypergraph, opts.allow_huge);
  }
  if (opts.kind == "explicit") {
    if (opts.members.empty()) throw CLI::ValidationError("--members", "explicit family needs members");
    return family_explicit(cs, parse_members(opts.members));
  }
  throw CLI::ValidationError("--family", "unknown family kind '" + opts.kind + "'");
}

void add_family_options(CLI::App* cmd, FamilyOptions& opts) {
  cmd->add_option("--family", opts.kind, "full|bspan|uniform|aligned|identity|backbone|explicit");
  cmd->add_option("--b", opts.b_list, "cardinalities for bspan, comma separated");
  cmd->add_option("--m", opts.m, "cardinality for the uniform family");
  cmd->add_option("--r", opts.r, "alignment cardinality");
  cmd->add_option("--members", opts.members, "explicit members, e.g. \"1,2,7;1,2,8\"");
  cmd->add_option("--pattern", opts.pattern_path, "pattern hypergraph for the backbone family");
  cmd->add_flag("--allow-huge", opts.allow_huge, "lift the family size guard");
}

struct SpectrumResult {
  RationalPoly charpoly;
  std::vector<double> spectrum;
};

SpectrumResult direct_spectrum(const Hypergraph& h, MatrixKind kind, double tol) {
  SpectrumResult out;
  out.charpoly = charpoly_exact(matrix_of(h, kind));
  out.spectrum = sorted_spectrum(matrix_of_float(h, kind), tol);
  return out;
}

CharPolyFactored closed_spectrum(const Hypergraph& h, const std::vector<int>& sizes, MatrixKind kind) {
  int total = 0;
  std::vector<VertexSet> partition;
  for (int s : sizes) {
    VertexSet part;
    for (int i = 1; i <= s; ++i) part.push_back(total + i);
    total += s;
    partition.push_back(std::move(part));
  }
  if (total != h.vertex_count())
    throw std::invalid_argument("class sizes sum to " + std::to_string(total) + " but the hypergraph has " +
                                std::to_string(h.vertex_count()) + " vertices");
  Decomposition dec = decompose(h, partition);
  JoinSpec spec;
  for (const auto& part : dec.parts) spec.parts.push_back(make_constituent(part));
  spec.counts = require_constant_counts(dec.family);
  spec.weights = dec.cross_weights;
  spec.kind = kind;
  return join_charpoly(spec);
}

int cmd_spectrum(const std::string& input, const std::string& matrix, const std::string& method,
                 const std::string& classes, double tol, bool as_json, std::ostream& out) {
  MatrixKind kind = parse_kind(matrix);
  HgrDocument doc = load_hgr(input);
  std::vector<int> sizes =
      classes.empty() ? std::vector<int>{doc.hypergraph.vertex_count()} : parse_sizes(classes);

  json report;
  report["input"] = input;
  report["matrix"] = matrix;
  report["method"] = method;
  bool agreement = true;

  SpectrumResult direct;
  CharPolyFactored closed;
  if (method == "direct" || method == "both") {
    direct = direct_spectrum(doc.hypergraph, kind, tol);
    report["charpoly"] = poly_json(direct.charpoly);
    report["spectrum"] = direct.spectrum;
  }
  if (method == "closed" || method == "both") {
    closed = closed_spectrum(doc.hypergraph, sizes, kind);
    report["closed_charpoly"] = poly_json(closed.expanded());
    report["closed_spectrum"] = closed.spectrum(tol);
    if (method == "closed") {
      report["charpoly"] = report["closed_charpoly"];
      report["spectrum"] = report["closed_spectrum"];
    }
  }
  if (method == "both") {
    if (kind == MatrixKind::NormalizedLaplacian)
      agreement = spectra_equal(direct.spectrum, closed.spectrum(tol), tol) &&
                  closed.expanded() == direct.charpoly;
    else
      agreement = closed.expanded() == direct.charpoly;
    report["agreement"] = agreement;
  }

  if (as_json) {
    out << report.dump(2) << "\n";
  } else {
    out << "input: " << input << "\nmatrix: " << matrix << "\n";
    if (method == "direct" || method == "both") {
      print_poly(out, "charpoly (direct)", direct.charpoly);
      print_spectrum(out, "spectrum (direct)", direct.spectrum);
    }
    if (method == "closed" || method == "both") {
      print_poly(out, "charpoly (closed form)", closed.expanded());
      print_spectrum(out, "spectrum (closed form)", closed.spectrum(tol));
    }
    if (method == "both") out << "agreement: " << (agreement ? "yes" : "NO") << "\n";
  }
  return agreement ? 0 : 1;
}

int cmd_verify(const std::string& a_path, const std::string& b_path, bool as_json, std::ostream& out) {
  HgrDocument a = load_hgr(a_path);
  HgrDocument b = load_hgr(b_path);
  CospectralReport rep = verify_cospectral(a.hypergraph, b.hypergraph);
  if (as_json) {
    json j;
    j["input"] = json::array({a_path, b_path});
    j["adjacency"] = rep.adjacency;
    j["laplacian"] = rep.laplacian;
    if (rep.normalized)
      j["normalized"] = *rep.normalized;
    else
      j["normalized"] = nullptr;
    j["adjacency_charpoly"] = poly_json(rep.adjacency_poly_1);
    j["laplacian_charpoly"] = poly_json(rep.laplacian_poly_1);
    out << j.dump(2) << "\n";
  } else {
    out << "adjacency cospectral:  " << (rep.adjacency ? "yes" : "no") << "\n";
    out << "laplacian cospectral:  " << (rep.laplacian ? "yes" : "no") << "\n";
    if (rep.normalized)
      out << "normalized cospectral: " << (*rep.normalized ? "yes" : "no") << "\n";
    else
      out << "normalized cospectral: refused (isolated vertex)\n";
    if (rep.adjacency) print_poly(out, "shared adjacency charpoly", rep.adjacency_poly_1);
  }
  return rep.all_three() ? 0 : 1;
}

int cmd_cospectral(int n, int uniform_m, bool regular, const std::string& out_dir, std::ostream& out) {
  std::vector<SearchScale> ladder;
  if (n > 0) {
    if (uniform_m < 2) throw CLI::ValidationError("--uniform", "need an edge cardinality >= 2");
    ladder.push_back({n, uniform_m});
  } else {
    ladder = default_search_ladder();
  }

  SearchReport report;
  if (regular || n == 0) {
    report = cospectral_search(ladder);
  } else {
    // single unrestricted scale
    auto hs = enumerate_hypergraphs(n, {uniform_m}, uniform_m, false);
    auto pairs = find_cospectral_pairs(hs);
    if (!pairs.empty()) {
      report.found_at = ScaleOutcome{{n, uniform_m}, SearchMode::Exhaustive};
      report.pairs = std::move(pairs);
    } else {
      report.exhausted.push_back({{n, uniform_m}, SearchMode::Exhaustive});
    }
  }
  out << report.summary();
  if (!report.found_at) {
    if (n > 0) out << "none found at n=" << n << "\n";
    return 0;
  }

  std::filesystem::path dir = out_dir.empty() ? "." : out_dir;
  std::filesystem::create_directories(dir);
  int index = 0;
  for (const auto& [h1, h2] : report.pairs) {
    ++index;
    CospectralReport pair_report = verify_cospectral(h1, h2);
    std::filesystem::path file = dir / ("cospectral_pair_" + std::to_string(index) + ".cert");
    std::ofstream cert(file);
    cert << "# shared adjacency charpoly (ascending):";
    for (const auto& c : pair_report.adjacency_poly_1.coeffs()) cert << " " << to_string(c);
    cert << "\n";
    cert << serialize_hgr(h1) << "---\n" << serialize_hgr(h2);

    // the joined pair certifying simultaneous cospectrality in all three matrices
    std::vector<std::pair<Hypergraph, Hypergraph>> slots{{h1, h2}, {h1, h1}};
    ClassSequence cs = ClassSequence::contiguous({h1.vertex_count(), h1.vertex_count()});
    WeightTable w(1);
    auto [j1, j2] = cospectral_join_family(slots, family_b_spanning(cs, {2}), w);
    CospectralReport joined = verify_cospectral(j1, j2);
    cert << "---\n# joined pair (spanning pair family, weight 1)\n";
    cert << serialize_hgr(j1) << "---\n" << serialize_hgr(j2);
    cert << "# joined pair simultaneously cospectral: " << (joined.all_three() ? "yes" : "NO") << "\n";
    out << "wrote " << file.string() << " (joined pair cospectral in all three matrices: "
        << (joined.all_three() ? "yes" : "NO") << ")\n";
    if (!joined.all_three()) return 1;
  }
  return 0;
}

int cmd_decompose(const std::string& input, const std::string& classes, std::ostream& out) {
  HgrDocument doc = load_hgr(input);
  std::vector<int> sizes = parse_sizes(classes);
  int total = 0;
  std::vector<VertexSet> partition;
  for (int s : sizes) {
    VertexSet part;
    for (int i = 1; i <= s; ++i) part.push_back(total + i);
    total += s;
    partition.push_back(std::move(part));
  }
  if (total != doc.hypergraph.vertex_count())
    throw std::invalid_argument("class sizes sum to " + std::to_string(total) + " but the hypergraph has " +
                                std::to_string(doc.hypergraph.vertex_count()) + " vertices");
  Decomposition dec = decompose(doc.hypergraph, partition);
  for (std::size_t i = 0; i < dec.parts.size(); ++i) {
    out << "# constituent " << (i + 1) << "\n";
    out << serialize_hgr(dec.parts[i]);
  }
  out << "# cross family (" << dec.family.members.size() << " members)\n";
  for (const auto& m : dec.family.members) {
    out << "member";
    for (Vertex v : m) out << " " << v;
    out << "\n";
  }
  for (const auto& [c, weight] : dec.cross_weights.entries())
    out << "wc " << c << " " << to_string(weight) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"weighted hypergraph joins and their spectra"};
  app.require_subcommand(1);

  // build
  std::string build_input, build_wc;
  int complete_n = 0, cu_n = 0, cu_r = 0;
  bool build_profile = false;
  auto* build = app.add_subcommand("build", "parse, validate and canonicalize a hypergraph");
  build->add_option("input", build_input, "hgr file");
  build->add_option("--complete", complete_n, "build the complete hypergraph on n vertices");
  build->add_option("--complete-uniform", cu_n, "n for the complete r-uniform hypergraph");
  build->add_option("--uniform-r", cu_r, "r for the complete r-uniform hypergraph");
  build->add_option("--wc", build_wc, "weights per cardinality, e.g. 2=1,3=1/2");
  build->add_flag("--profile", build_profile, "print the structural profile instead of the hgr");

  // spectrum
  std::string spec_input, spec_matrix = "adj", spec_method = "direct", spec_classes;
  double spec_tol = 1e-9;
  bool spec_json = false;
  auto* spectrum = app.add_subcommand("spectrum", "spectrum by direct and closed-form methods");
  spectrum->add_option("input", spec_input, "hgr file")->required();
  spectrum->add_option("--matrix", spec_matrix, "adj|lap|nlap");
  spectrum->add_option("--method", spec_method, "direct|closed|both")
      ->check(CLI::IsMember({"direct", "closed", "both"}));
  spectrum->add_option("--classes", spec_classes, "class sizes for the closed form, e.g. 3,3");
  spectrum->add_option("--tol", spec_tol, "floating comparison tolerance");
  spectrum->add_flag("--json", spec_json, "machine readable report");

  // join
  std::vector<std::string> join_inputs;
  std::string join_wc, join_classes;
  FamilyOptions join_family_opts;
  auto* join = app.add_subcommand("join", "join constituents along a family");
  join->add_option("inputs", join_inputs, "constituent hgr files")->required();
  join->add_option("--classes", join_classes, "class sizes, e.g. 3,3");
  join->add_option("--wc", join_wc, "weights per cardinality, e.g. 2=1,3=1/2");
  add_family_options(join, join_family_opts);

  // backbone-join
  std::vector<std::string> bb_inputs;
  std::string bb_wc, bb_pattern, bb_family = "bspan", bb_b;
  int bb_r = 1;
  bool bb_allow_huge = false;
  auto* bbjoin = app.add_subcommand("backbone-join", "join constituents along a pattern hypergraph");
  bbjoin->add_option("inputs", bb_inputs, "constituent hgr files")->required();
  bbjoin->add_option("--pattern", bb_pattern, "pattern hgr on the class indices")->required();
  bbjoin->add_option("--family", bb_family, "bspan|full|aligned|identity (per pattern edge)");
  bbjoin->add_option("--b", bb_b, "cardinalities for bspan; default the pattern edge size");
  bbjoin->add_option("--r", bb_r, "alignment cardinality");
  bbjoin->add_option("--wc", bb_wc, "weights per cardinality, e.g. 2=1,3=1/2");
  bbjoin->add_flag("--allow-huge", bb_allow_huge, "lift the family size guard");

  // verify
  std::string verify_a, verify_b;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "exact cospectrality certificates");
  verify->add_option("a", verify_a, "first hgr file")->required();
  verify->add_option("b", verify_b, "second hgr file")->required();
  verify->add_flag("--json", verify_json, "machine readable report");

  // cospectral
  int cos_n = 0, cos_m = 0;
  bool cos_regular = false;
  std::string cos_out;
  auto* cospectral = app.add_subcommand("cospectral", "search for cospectral pairs and join them");
  cospectral->add_option("--n", cos_n, "vertex count of the search scale");
  cospectral->add_option("--uniform", cos_m, "edge cardinality of the search scale");
  cospectral->add_flag("--regular", cos_regular, "restrict the search to regular hypergraphs");
  cospectral->add_option("--out", cos_out, "directory for certificate files");

  // decompose
  std::string dec_input, dec_classes;
  auto* decomposec = app.add_subcommand("decompose", "view a hypergraph as a join");
  decomposec->add_option("input", dec_input, "hgr file")->required();
  decomposec->add_option("--classes", dec_classes, "class sizes, e.g. 3,3")->required();

  std::vector<std::string> argv = args;
  try {
    std::vector<const char*> raw;
    raw.push_back("tenjoin");
    for (const auto& a : argv) raw.push_back(a.c_str());
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (build->parsed()) {
      Hypergraph h;
      WeightTable w = parse_weight_entries(build_wc);
      bool have = false;
      if (complete_n > 0) {
        h = complete(complete_n, w);
        have = true;
      } else if (cu_n > 0) {
        h = complete_uniform(cu_n, cu_r, w.at(cu_r >= 2 ? cu_r : 2));
        have = true;
      } else if (!build_input.empty()) {
        HgrDocument doc = load_hgr(build_input);
        h = doc.hypergraph;
        if (doc.has_weight_records) w = doc.weights;
        have = true;
      }
      if (!have) throw CLI::ValidationError("build", "give an input file or a generator option");
      if (build_profile) {
        StructuralProfile p = h.profile();
        out << "vertices: " << h.vertex_count() << "\n";
        out << "edges: " << h.edges().size() << "\n";
        out << "rank: " << p.rank << "\ncorank: " << p.corank << "\n";
        out << "uniform: " << (p.uniform ? std::to_string(*p.uniform) : std::string("no")) << "\n";
        out << "regular: " << (p.regular ? to_string(*p.regular) : std::string("no")) << "\n";
      } else {
        out << serialize_hgr(h, w);
      }
      return 0;
    }
    if (spectrum->parsed())
      return cmd_spectrum(spec_input, spec_matrix, spec_method, spec_classes, spec_tol, spec_json, out);
    if (join->parsed()) {
      std::vector<Hypergraph> parts;
      WeightTable w = parse_weight_entries(join_wc);
      for (const auto& path : join_inputs) parts.push_back(load_hgr(path).hypergraph);
      std::vector<int> sizes;
      if (!join_classes.empty()) {
        sizes = parse_sizes(join_classes);
      } else {
        for (const auto& p : parts) sizes.push_back(p.vertex_count());
      }
      if (sizes.size() != parts.size())
        throw std::invalid_argument("need one class size per constituent");
      EdgeFamily fam = build_family(join_family_opts, ClassSequence::contiguous(sizes));
      out << serialize_hgr(tensor_join(parts, fam, w), w);
      return 0;
    }
    if (bbjoin->parsed()) {
      std::vector<Hypergraph> parts;
      for (const auto& path : bb_inputs) parts.push_back(load_hgr(path).hypergraph);
      Hypergraph pattern = load_hgr(bb_pattern).hypergraph;
      WeightTable w = parse_weight_entries(bb_wc);
      std::vector<int> sizes;
      for (const auto& p : parts) sizes.push_back(p.vertex_count());
      std::vector<EdgeFamily> families;
      for (const auto& e : pattern.edges()) {
        ClassSequence cs = backbone_classes(sizes, e.vertices);
        if (bb_family == "bspan") {
          std::set<int> b = bb_b.empty() ? std::set<int>{static_cast<int>(e.vertices.size())} : parse_b(bb_b);
          families.push_back(family_b_spanning(cs, b, bb_allow_huge));
        } else if (bb_family == "full") {
          families.push_back(family_full(cs, bb_allow_huge));
        } else if (bb_family == "aligned") {
          families.push_back(family_aligned(cs, bb_r));
        } else if (bb_family == "identity") {
          families.push_back(family_identity(cs));
        } else {
          throw CLI::ValidationError("--family", "unknown backbone family '" + bb_family + "'");
        }
      }
      out << serialize_hgr(backbone_join(pattern, parts, families, w), w);
      return 0;
    }
    if (verify->parsed()) return cmd_verify(verify_a, verify_b, verify_json, out);
    if (cospectral->parsed()) return cmd_cospectral(cos_n, cos_m, cos_regular, cos_out, out);
    if (decomposec->parsed()) return cmd_decompose(dec_input, dec_classes, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace tenjoin
