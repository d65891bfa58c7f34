#pragma once

#include <stdexcept>
#include <string>

#include "tenjoin/hypergraph.hpp"

namespace tenjoin {

// Line-oriented hypergraph format:
//   hgr 1
//   vertices <n>
//   edge <weight> <v1> ... <vk>     weight is an integer, p/q or a decimal
//   wc <c> <weight>                 join weight table entry
// '#' starts a comment; blank lines are ignored; vertices are 1-based.
struct HgrDocument {
  Hypergraph hypergraph;
  WeightTable weights{1};
  bool has_weight_records = false;
};

struct HgrParseError : std::runtime_error {
  HgrParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
  int line;
};

HgrDocument parse_hgr(const std::string& text);
HgrDocument load_hgr(const std::string& path);

// Canonical form: sorted edges, reduced rationals.
std::string serialize_hgr(const Hypergraph& h);
std::string serialize_hgr(const Hypergraph& h, const WeightTable& w);

}  // namespace tenjoin
