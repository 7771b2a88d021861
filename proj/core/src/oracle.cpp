#include "laakso/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <numbers>
#include <optional>

#include <Eigen/Eigenvalues>

#include "laakso/errors.hpp"
#include "laakso/format.hpp"

namespace laakso {

Eigen::SparseMatrix<double> DiscretizedGraph::symmetric_operator() const {
  const Eigen::VectorXd inv_sqrt = mass.cwiseSqrt().cwiseInverse();
  Eigen::SparseMatrix<double> out = stiffness;
  for (int k = 0; k < out.outerSize(); ++k) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(out, k); it; ++it) {
      it.valueRef() *= inv_sqrt(it.row()) * inv_sqrt(it.col());
    }
  }
  return out;
}

DiscretizedGraph discretize(const MetricGraph& graph, int points_per_edge) {
  if (points_per_edge < 3) {
    throw ValidationError("need at least 3 points per edge (got " +
                          std::to_string(points_per_edge) + ")");
  }
  const int M = points_per_edge;
  DiscretizedGraph out;
  out.points_per_edge = M;

  std::vector<Eigen::Index> vertex_index(graph.vertices.size(), -1);
  Eigen::Index next = 0;
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    if (graph.vertices[v].bc == BoundaryTag::dirichlet) {
      out.has_dirichlet = true;
    } else {
      vertex_index[v] = next++;
    }
  }
  out.vertex_unknowns = next;
  const Eigen::Index dim =
      next + static_cast<Eigen::Index>(graph.edges.size()) * static_cast<Eigen::Index>(M - 1);

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(dim) * 3);
  out.mass = Eigen::VectorXd::Zero(dim);

  Eigen::Index interior = next;
  for (const auto& e : graph.edges) {
    const double h = to_double(e.length) / M;
    const double w = 1.0 / h;
    auto node = [&](int i) -> Eigen::Index {
      if (i == 0) return vertex_index[e.u];
      if (i == M) return vertex_index[e.v];
      return interior + i - 1;
    };
    for (int i = 1; i < M; ++i) out.mass(interior + i - 1) = h;
    if (vertex_index[e.u] >= 0) out.mass(vertex_index[e.u]) += h / 2;
    if (vertex_index[e.v] >= 0) out.mass(vertex_index[e.v]) += h / 2;
    for (int i = 0; i < M; ++i) {
      const Eigen::Index a = node(i);
      const Eigen::Index b = node(i + 1);
      if (a >= 0) triplets.emplace_back(a, a, w);
      if (b >= 0) triplets.emplace_back(b, b, w);
      if (a >= 0 && b >= 0) {
        triplets.emplace_back(a, b, -w);
        triplets.emplace_back(b, a, -w);
      }
    }
    out.edges.push_back(DiscretizedGraph::Edge{vertex_index[e.u], vertex_index[e.v], h});
    interior += M - 1;
  }
  out.stiffness.resize(dim, dim);
  out.stiffness.setFromTriplets(triplets.begin(), triplets.end());
  out.stiffness.makeCompressed();
  return out;
}

namespace {

class InertiaCounter {
 public:
  explicit InertiaCounter(const DiscretizedGraph& d) : d_(d) {}

  Eigen::Index below(double mu) {
    ++evaluations_;
    if (auto c = try_count(mu)) return *c;
    // mu hit an interior-chain eigenvalue exactly; move off it.
    const double nudged = mu * (1.0 + 1e-13) + 1e-13;
    if (auto c = try_count(nudged)) return *c;
    throw ConvergenceError("inertia count of K - mu W failed at mu = " + format_double(mu) +
                           " after " + std::to_string(evaluations_) + " evaluations (dimension " +
                           std::to_string(d_.dimension()) + ")");
  }

  long evaluations() const noexcept { return evaluations_; }

 private:
  std::optional<Eigen::Index> try_count(double mu) {
    const int M = d_.points_per_edge;
    const Eigen::Index nv = d_.vertex_unknowns;
    Eigen::MatrixXd schur = Eigen::MatrixXd::Zero(nv, nv);
    Eigen::Index count = 0;
    for (const auto& e : d_.edges) {
      const double w = 1.0 / e.h;
      const double c = 1.0 - 0.5 * mu * e.h * e.h;  // cos(theta)
      double diag = 0.0;
      double off = 0.0;
      if (c > 1.0) {
        const double t = std::acosh(c);
        diag = w * std::sinh(t) / std::tanh(M * t);
        off = -w * std::sinh(t) / std::sinh(M * t);
      } else if (c == 1.0) {
        diag = w / M;
        off = -w / M;
      } else if (c > -1.0) {
        const double theta = std::acos(c);
        const double phase = M * theta;
        // Dirichlet chain eigenvalues below mu: k*pi/M < theta. The floor is
        // read off the sign of sin(phase) so both stay consistent near k*pi.
        const double sm = std::sin(phase);
        if (sm == 0.0) return std::nullopt;
        const double k_near = std::round(phase / std::numbers::pi);
        const bool odd = std::fmod(k_near, 2.0) != 0.0;
        const double k_floor = ((sm > 0.0) != odd) ? k_near : k_near - 1.0;
        count += static_cast<Eigen::Index>(std::clamp<double>(k_floor, 0.0, M - 1));
        diag = w * std::sin(theta) * std::cos(phase) / sm;
        off = -w * std::sin(theta) / sm;
      } else {
        throw ConvergenceError("shift mu = " + format_double(mu) +
                               " is beyond the resolvable band of the mesh");
      }
      if (e.u >= 0) schur(e.u, e.u) += diag;
      if (e.v >= 0) schur(e.v, e.v) += diag;
      if (e.u >= 0 && e.v >= 0) {
        schur(e.u, e.v) += off;
        schur(e.v, e.u) += off;
      }
    }
    if (!schur.allFinite()) return std::nullopt;
    if (nv > 0) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(schur, Eigen::EigenvaluesOnly);
      if (eig.info() != Eigen::Success) return std::nullopt;
      count += (eig.eigenvalues().array() < 0.0).count();
    }
    return count;
  }

  const DiscretizedGraph& d_;
  long evaluations_ = 0;
};

}  // namespace

Eigen::Index eigenvalues_below(const DiscretizedGraph& d, double mu) {
  InertiaCounter counter(d);
  return counter.below(mu);
}

std::vector<double> lowest_eigenvalues(const DiscretizedGraph& d, double cutoff, double margin) {
  if (!(cutoff > 0.0)) {
    throw ValidationError("eigenvalue cutoff must be positive");
  }
  if (margin < 0.0) {
    throw ValidationError("cutoff margin must be nonnegative");
  }
  InertiaCounter counter(d);
  const double hi = cutoff * (1.0 + margin);
  // K + W is positive definite, so nothing lies below -1.
  const double lo = -1.0;
  const Eigen::Index c_hi = counter.below(hi);
  const Eigen::Index c_lo = counter.below(lo);
  if (c_lo != 0) {
    throw ConvergenceError("inertia count below -1 is " + std::to_string(c_lo) +
                           "; the assembled operator is not positive semidefinite");
  }

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(c_hi));
  struct Bracket {
    double lo, hi;
    Eigen::Index c_lo, c_hi;
  };
  std::vector<Bracket> stack{{lo, hi, c_lo, c_hi}};
  while (!stack.empty()) {
    Bracket b = stack.back();
    stack.pop_back();
    if (b.c_hi == b.c_lo) continue;
    const double width = b.hi - b.lo;
    if (width <= 1e-12 * std::max(1.0, std::abs(b.hi))) {
      out.insert(out.end(), static_cast<std::size_t>(b.c_hi - b.c_lo), 0.5 * (b.lo + b.hi));
      continue;
    }
    const double mid = 0.5 * (b.lo + b.hi);
    const Eigen::Index c_mid = counter.below(mid);
    if (c_mid < b.c_lo || c_mid > b.c_hi) {
      throw ConvergenceError("non-monotone inertia counts near mu = " + format_double(mid) +
                             " after " + std::to_string(counter.evaluations()) +
                             " evaluations");
    }
    // Upper half first so the lower half is processed next (ascending output).
    stack.push_back({mid, b.hi, c_mid, b.c_hi});
    stack.push_back({b.lo, mid, b.c_lo, c_mid});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> richardson(const std::vector<double>& e_h, const std::vector<double>& e_h2) {
  if (e_h.size() != e_h2.size()) {
    throw ValidationError("richardson: " + std::to_string(e_h.size()) + " coarse values vs " +
                          std::to_string(e_h2.size()) + " fine values");
  }
  std::vector<double> out(e_h.size());
  for (std::size_t i = 0; i < e_h.size(); ++i) out[i] = (4.0 * e_h2[i] - e_h[i]) / 3.0;
  return out;
}

std::string to_string(MatchStatus status) {
  switch (status) {
    case MatchStatus::match:
      return "match";
    case MatchStatus::deficit:
      return "deficit";
    case MatchStatus::surplus:
      return "surplus";
  }
  return "match";
}

bool VerificationReport::all_matched() const { return mismatches() == 0; }

std::size_t VerificationReport::mismatches() const {
  return static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [](const auto& r) { return r.status != MatchStatus::match; }));
}

double VerificationReport::max_rel_err() const {
  double m = 0.0;
  for (const auto& r : rows) {
    if (r.closed_mult > 0 && r.oracle_mult > 0) m = std::max(m, r.rel_err);
  }
  return m;
}

VerificationReport verify_spectrum(const EnumeratedSpectrum& closed,
                                   const std::vector<double>& oracle, double tol_rel) {
  std::vector<double> values = oracle;
  std::sort(values.begin(), values.end());
  struct Cluster {
    double first;
    double sum;
    std::int64_t count;
    double mean() const { return sum / static_cast<double>(count); }
  };
  std::vector<Cluster> clusters;
  for (double v : values) {
    if (!clusters.empty() &&
        std::abs(v - clusters.back().first) <= tol_rel * std::max(1.0, std::abs(clusters.back().first))) {
      clusters.back().sum += v;
      ++clusters.back().count;
    } else {
      clusters.push_back({v, v, 1});
    }
  }

  VerificationReport report;
  report.tol_rel = tol_rel;
  std::vector<bool> used(clusters.size(), false);
  for (const auto& e : closed.entries) {
    if (e.lambda > closed.cutoff) continue;
    std::ptrdiff_t best = -1;
    double best_err = 0.0;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if (used[c]) continue;
      const double err = std::abs(clusters[c].mean() - e.lambda) / std::max(1.0, e.lambda);
      if (err <= tol_rel && (best < 0 || err < best_err)) {
        best = static_cast<std::ptrdiff_t>(c);
        best_err = err;
      }
    }
    VerificationRow row;
    row.lambda = e.lambda;
    row.closed_mult = e.multiplicity;
    if (best >= 0) {
      used[static_cast<std::size_t>(best)] = true;
      row.oracle_mult = clusters[static_cast<std::size_t>(best)].count;
      row.rel_err = best_err;
    }
    row.status = row.oracle_mult == row.closed_mult ? MatchStatus::match
                 : row.oracle_mult < row.closed_mult ? MatchStatus::deficit
                                                     : MatchStatus::surplus;
    report.rows.push_back(row);
  }
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    if (used[c] || clusters[c].mean() > closed.cutoff) continue;
    report.rows.push_back(VerificationRow{clusters[c].mean(), 0, clusters[c].count, 1.0,
                                          MatchStatus::surplus});
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
  return report;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"lambda", r.lambda},
                    {"closed_mult", r.closed_mult},
                    {"oracle_mult", r.oracle_mult},
                    {"rel_err", r.rel_err},
                    {"status", to_string(r.status)}});
  }
  return {{"tol_rel", report.tol_rel},
          {"all_matched", report.all_matched()},
          {"mismatches", report.mismatches()},
          {"entries", rows}};
}

OracleRun run_oracle(const MetricGraph& graph, const EnumeratedSpectrum& closed,
                     int points_per_edge, double tol_rel) {
  if (graph.level > max_oracle_level) {
    throw ResourceError("the graph oracle stops at level " + std::to_string(max_oracle_level) +
                        " (requested F_" + std::to_string(graph.level) + ")");
  }
  if (points_per_edge < 6 || points_per_edge % 2 != 0) {
    throw ValidationError("oracle mesh must be an even number of points per edge >= 6");
  }
  OracleRun run;
  run.coarse = lowest_eigenvalues(discretize(graph, points_per_edge / 2), closed.cutoff);
  run.fine = lowest_eigenvalues(discretize(graph, points_per_edge), closed.cutoff);
  // Discrete eigenvalues sit below their limits, so the fine list may be shorter.
  const std::size_t n = std::min(run.coarse.size(), run.fine.size());
  run.coarse.resize(n);
  run.fine.resize(n);
  run.extrapolated = richardson(run.coarse, run.fine);
  run.report = verify_spectrum(closed, run.extrapolated, tol_rel);
  return run;
}

}  // namespace laakso
