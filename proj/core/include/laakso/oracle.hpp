#pragma once

#include <string>
#include <vector>

#include <Eigen/SparseCore>
#include <json.hpp>

#include "laakso/graph.hpp"
#include "laakso/spectrum.hpp"

namespace laakso {

// Second-order finite differences on every edge with shared vertex unknowns.
// The eigenproblem is K u = lambda W u with W the lumped (diagonal) mass:
// interior points carry h_e, a vertex carries half the spacing of each
// incident edge. Dirichlet vertices are eliminated.
struct DiscretizedGraph {
  // Edge endpoints as vertex-unknown indices (-1 for a Dirichlet vertex).
  struct Edge {
    Eigen::Index u = -1;
    Eigen::Index v = -1;
    double h = 0.0;
  };

  int points_per_edge = 0;
  Eigen::Index vertex_unknowns = 0;
  std::vector<Edge> edges;
  Eigen::SparseMatrix<double> stiffness;
  Eigen::VectorXd mass;
  bool has_dirichlet = false;

  Eigen::Index dimension() const { return stiffness.rows(); }

  // W^{-1/2} K W^{-1/2}, the symmetric form of the operator.
  Eigen::SparseMatrix<double> symmetric_operator() const;
};

DiscretizedGraph discretize(const MetricGraph& graph, int points_per_edge);

// Every eigenvalue <= cutoff*(1+margin), repeated by multiplicity, ascending.
// Eigenvalues are located by bisection on Sylvester inertia counts of
// K - mu W. Each count eliminates the interior points of every edge in closed
// form (a uniform chain) and adds the inertia of the dense vertex Schur
// complement, which is exact for this matrix and immune to pivot growth.
std::vector<double> lowest_eigenvalues(const DiscretizedGraph& d, double cutoff,
                                       double margin = 0.05);

// Number of eigenvalues strictly below mu.
Eigen::Index eigenvalues_below(const DiscretizedGraph& d, double mu);

// (4 e_{h/2} - e_h)/3 elementwise.
std::vector<double> richardson(const std::vector<double>& e_h, const std::vector<double>& e_h2);

enum class MatchStatus { match, deficit, surplus };

std::string to_string(MatchStatus status);

struct VerificationRow {
  double lambda = 0.0;
  std::int64_t closed_mult = 0;
  std::int64_t oracle_mult = 0;
  double rel_err = 0.0;
  MatchStatus status = MatchStatus::match;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;
  double tol_rel = 0.0;

  bool all_matched() const;
  std::size_t mismatches() const;
  double max_rel_err() const;
};

// Clusters the oracle values, then pairs clusters with closed-form entries.
// Oracle clusters above the closed cutoff with no partner are ignored.
VerificationReport verify_spectrum(const EnumeratedSpectrum& closed,
                                   const std::vector<double>& oracle, double tol_rel = 1e-3);

nlohmann::json to_json(const VerificationReport& report);

// Highest level the oracle accepts.
inline constexpr int max_oracle_level = 3;

struct OracleRun {
  std::vector<double> coarse;
  std::vector<double> fine;
  std::vector<double> extrapolated;
  VerificationReport report;
};

// Solves at M/2 and M points per edge, extrapolates and compares with closed.
OracleRun run_oracle(const MetricGraph& graph, const EnumeratedSpectrum& closed,
                     int points_per_edge, double tol_rel = 1e-3);

}  // namespace laakso
