#include "tenjoin/hgr.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tenjoin {

HgrDocument parse_hgr(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool saw_header = false;
  bool saw_vertices = false;
  int n = 0;
  std::vector<Edge> edges;
  WeightTable weights(1);
  bool has_wc = false;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;

    if (!saw_header) {
      if (keyword != "hgr") throw HgrParseError(lineno, "expected 'hgr 1' header");
      int version = 0;
      if (!(ls >> version) || version != 1) throw HgrParseError(lineno, "unsupported hgr version");
      std::string extra;
      if (ls >> extra) throw HgrParseError(lineno, "trailing tokens after header");
      saw_header = true;
      continue;
    }
    if (keyword == "vertices") {
      if (saw_vertices) throw HgrParseError(lineno, "duplicate vertices record");
      if (!(ls >> n) || n < 0) throw HgrParseError(lineno, "expected a vertex count");
      std::string extra;
      if (ls >> extra) throw HgrParseError(lineno, "trailing tokens after vertex count");
      saw_vertices = true;
      continue;
    }
    if (keyword == "edge") {
      if (!saw_vertices) throw HgrParseError(lineno, "edge before vertices record");
      std::string weight_text;
      if (!(ls >> weight_text)) throw HgrParseError(lineno, "edge needs a weight");
      Rational weight;
      try {
        weight = parse_rational(weight_text);
      } catch (const std::invalid_argument& err) {
        throw HgrParseError(lineno, err.what());
      }
      if (weight < 0) throw HgrParseError(lineno, "negative weight");
      VertexSet verts;
      int v;
      while (ls >> v) {
        if (v < 1 || v > n) throw HgrParseError(lineno, "vertex " + std::to_string(v) + " out of range");
        verts.push_back(v);
      }
      if (!ls.eof()) throw HgrParseError(lineno, "malformed vertex list");
      if (verts.empty()) throw HgrParseError(lineno, "empty edge");
      VertexSet sorted = verts;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
          throw HgrParseError(lineno, "repeated vertex " + std::to_string(sorted[i]) + " in edge");
      edges.push_back({std::move(sorted), weight});
      continue;
    }
    if (keyword == "wc") {
      int c;
      std::string weight_text;
      if (!(ls >> c >> weight_text)) throw HgrParseError(lineno, "wc needs a cardinality and a weight");
      if (c < 2) throw HgrParseError(lineno, "wc cardinality must be >= 2");
      try {
        Rational w = parse_rational(weight_text);
        if (w < 0) throw HgrParseError(lineno, "negative weight");
        weights.set(c, w);
      } catch (const std::invalid_argument& err) {
        throw HgrParseError(lineno, err.what());
      }
      has_wc = true;
      continue;
    }
    throw HgrParseError(lineno, "unknown record '" + keyword + "'");
  }
  if (!saw_header) throw HgrParseError(lineno ? lineno : 1, "missing 'hgr 1' header");
  if (!saw_vertices) throw HgrParseError(lineno ? lineno : 1, "missing vertices record");

  HgrDocument doc;
  doc.hypergraph = build_hypergraph(n, std::move(edges));
  doc.weights = weights;
  doc.has_weight_records = has_wc;
  return doc;
}

HgrDocument load_hgr(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_hgr(buf.str());
  } catch (const HgrParseError& err) {
    throw std::runtime_error(path + ": " + err.what());
  }
}

namespace {

void serialize_body(std::ostringstream& os, const Hypergraph& h) {
  os << "hgr 1\n";
  os << "vertices " << h.vertex_count() << "\n";
  for (const auto& e : h.edges()) {
    os << "edge " << to_string(e.weight);
    for (Vertex v : e.vertices) os << " " << v;
    os << "\n";
  }
}

}  // namespace

std::string serialize_hgr(const Hypergraph& h) {
  std::ostringstream os;
  serialize_body(os, h);
  return os.str();
}

std::string serialize_hgr(const Hypergraph& h, const WeightTable& w) {
  std::ostringstream os;
  serialize_body(os, h);
  for (const auto& [c, weight] : w.entries()) os << "wc " << c << " " << to_string(weight) << "\n";
  return os.str();
}

}  // namespace tenjoin
