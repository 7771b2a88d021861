#include "laakso/graph.hpp"

#include <map>
#include <numeric>

#include "laakso/errors.hpp"

namespace laakso {

std::string to_string(BoundaryTag tag) {
  switch (tag) {
    case BoundaryTag::kirchhoff:
      return "kirchhoff";
    case BoundaryTag::neumann:
      return "neumann";
    case BoundaryTag::dirichlet:
      return "dirichlet";
  }
  return "kirchhoff";
}

BoundaryTag parse_boundary_tag(const std::string& text) {
  if (text == "kirchhoff") return BoundaryTag::kirchhoff;
  if (text == "neumann") return BoundaryTag::neumann;
  if (text == "dirichlet") return BoundaryTag::dirichlet;
  throw ValidationError("unknown boundary tag '" + text + "'");
}

std::vector<int> MetricGraph::degrees() const {
  std::vector<int> deg(vertices.size(), 0);
  for (const auto& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

bool MetricGraph::is_connected() const {
  if (vertices.empty()) return true;
  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::size_t components = vertices.size();
  for (const auto& e : edges) {
    auto a = find(e.u);
    auto b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

bool MetricGraph::has_dirichlet() const {
  for (const auto& v : vertices) {
    if (v.bc == BoundaryTag::dirichlet) return true;
  }
  return false;
}

MetricGraph build_graph(const JSequence& seq, int n, std::int64_t max_edges) {
  if (n < 0) {
    throw ValidationError("graph level must be >= 0");
  }
  if (n > 40) {
    throw ResourceError("F_" + std::to_string(n) + " is beyond the memory budget");
  }
  const std::int64_t d = checked_d(seq, n);
  const std::int64_t sheets = std::int64_t{1} << n;
  std::int64_t edge_count = 0;
  if (__builtin_mul_overflow(sheets, d, &edge_count) || edge_count > max_edges) {
    throw ResourceError("F_" + std::to_string(n) + " has more than " + std::to_string(max_edges) +
                        " edges; refusing to build it");
  }

  // Level of each interior grid point m/d_n.
  std::vector<int> level(static_cast<std::size_t>(d + 1), 0);
  {
    std::int64_t stride = d;
    for (int i = 1; i <= n; ++i) {
      stride /= seq.j(i);
      for (std::int64_t m = stride; m < d; m += stride) {
        if (level[static_cast<std::size_t>(m)] == 0) level[static_cast<std::size_t>(m)] = i;
      }
    }
  }

  MetricGraph g;
  g.level = n;
  std::map<std::pair<std::int64_t, std::string>, std::size_t> index;
  auto vertex = [&](std::int64_t m, std::string sheet) {
    const bool boundary = m == 0 || m == d;
    if (!boundary) sheet[static_cast<std::size_t>(level[static_cast<std::size_t>(m)] - 1)] = '0';
    auto key = std::make_pair(m, sheet);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    const std::size_t id = g.vertices.size();
    g.vertices.push_back(
        GraphVertex{Rational(m, d), sheet, boundary ? BoundaryTag::neumann : BoundaryTag::kirchhoff});
    index.emplace(std::move(key), id);
    return id;
  };

  const Rational len(1, d);
  g.edges.reserve(static_cast<std::size_t>(edge_count));
  for (std::int64_t a = 0; a < sheets; ++a) {
    std::string sheet(static_cast<std::size_t>(n), '0');
    for (int b = 0; b < n; ++b) {
      if ((a >> (n - 1 - b)) & 1) sheet[static_cast<std::size_t>(b)] = '1';
    }
    for (std::int64_t m = 0; m < d; ++m) {
      const auto u = vertex(m, sheet);
      const auto v = vertex(m + 1, sheet);
      g.edges.push_back(GraphEdge{u, v, len});
    }
  }
  return g;
}

MetricGraph with_dirichlet(MetricGraph graph, const std::vector<Rational>& xs) {
  for (const auto& x : xs) {
    bool found = false;
    for (auto& v : graph.vertices) {
      if (v.x == x) {
        v.bc = BoundaryTag::dirichlet;
        found = true;
      }
    }
    if (!found) {
      throw ValidationError("no vertex of F_" + std::to_string(graph.level) + " sits at x = " +
                            to_string(x));
    }
  }
  return graph;
}

MetricGraph build_plated_graph(const PlateConfig& cfg, int n) {
  if (n < 1) {
    throw ValidationError("plates live on level-1 wormholes; need n >= 1");
  }
  if (!cfg.is_nominal()) {
    throw ValidationError("the graph oracle only represents the nominal plate separation");
  }
  if (!cfg.on_wormholes()) {
    throw ValidationError("plates are level-1 wormholes only when j - Z is even (j=" +
                          std::to_string(cfg.j) + ", Z=" + std::to_string(cfg.Z) + ")");
  }
  const auto pos = cfg.plate_positions();
  return with_dirichlet(build_graph(make_sequence({cfg.j}, 1), n), {pos[0], pos[1]});
}

nlohmann::json to_json(const MetricGraph& graph) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& v : graph.vertices) {
    vertices.push_back({{"x", to_string(v.x)}, {"sheet", v.sheet}, {"bc", to_string(v.bc)}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : graph.edges) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"len", to_string(e.length)}});
  }
  return {{"level", graph.level}, {"vertices", vertices}, {"edges", edges}};
}

}  // namespace laakso
