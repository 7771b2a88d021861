#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "laakso/plates.hpp"
#include "laakso/rational.hpp"
#include "laakso/sequence.hpp"

namespace laakso {

enum class BoundaryTag { kirchhoff, neumann, dirichlet };

std::string to_string(BoundaryTag tag);
BoundaryTag parse_boundary_tag(const std::string& text);

struct GraphVertex {
  Rational x;
  std::string sheet;  // canonical address; the identified bit is written as '0'
  BoundaryTag bc = BoundaryTag::kirchhoff;
};

struct GraphEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational length;
};

struct MetricGraph {
  int level = 0;
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;

  std::vector<int> degrees() const;
  bool is_connected() const;
  bool has_dirichlet() const;
};

// F_n: 2^n copies of [0,1] cut into cells of length 1/d_n, glued at every
// wormhole x in B_i across sheet addresses that differ only in bit i.
MetricGraph build_graph(const JSequence& seq, int n, std::int64_t max_edges = 4'000'000);

// Tags every vertex at coordinate x with a Dirichlet condition.
MetricGraph with_dirichlet(MetricGraph graph, const std::vector<Rational>& xs);

// F_n with Dirichlet tags at the two plates of cfg (requires plates in L_1).
MetricGraph build_plated_graph(const PlateConfig& cfg, int n);

nlohmann::json to_json(const MetricGraph& graph);

}  // namespace laakso
