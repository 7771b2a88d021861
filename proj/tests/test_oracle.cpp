#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "laakso/errors.hpp"
#include "laakso/oracle.hpp"

namespace laakso {
namespace {

constexpr double pi2 = std::numbers::pi * std::numbers::pi;

Eigen::VectorXd dense_eigenvalues(const DiscretizedGraph& d) {
  const Eigen::MatrixXd a = Eigen::MatrixXd(d.symmetric_operator());
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a, Eigen::EigenvaluesOnly).eigenvalues();
}

TEST(Oracle, OperatorIsSymmetricAndNonNegative) {
  const auto d = discretize(build_graph(parse_sequence("2,3"), 2), 8);
  const Eigen::MatrixXd a = Eigen::MatrixXd(d.symmetric_operator());
  EXPECT_LE((a - a.transpose()).cwiseAbs().maxCoeff(), 1e-12 * a.cwiseAbs().maxCoeff());
  EXPECT_EQ(eigenvalues_below(d, -1e-10), 0);
  EXPECT_GE(dense_eigenvalues(d).minCoeff(), -1e-10);
}

TEST(Oracle, InertiaCountsMatchDenseSolver) {
  for (const auto& graph : {build_graph(parse_sequence("2"), 2), build_plated_graph(plate_config(5, 3), 1)}) {
    const auto d = discretize(graph, 10);
    const auto ev = dense_eigenvalues(d);
    for (double mu : {0.5, 9.0, 40.0, 123.4, 400.0, 1500.0}) {
      const auto expected = std::count_if(ev.data(), ev.data() + ev.size(), [&](double v) { return v < mu; });
      EXPECT_EQ(eigenvalues_below(d, mu), expected) << "mu=" << mu;
    }
  }
}

TEST(Oracle, BisectionMatchesDenseSolver) {
  const auto d = discretize(build_graph(parse_sequence("3"), 1), 12);
  const auto ev = dense_eigenvalues(d);
  const auto low = lowest_eigenvalues(d, 300.0, 0.0);
  ASSERT_FALSE(low.empty());
  for (std::size_t i = 0; i < low.size(); ++i) EXPECT_NEAR(low[i], ev[static_cast<Eigen::Index>(i)], 1e-9 * std::max(1.0, ev[static_cast<Eigen::Index>(i)]));
}

TEST(Oracle, SecondOrderConvergenceOnTheInterval) {
  const auto graph = build_graph(parse_sequence("2"), 0);
  const auto coarse = lowest_eigenvalues(discretize(graph, 32), 50.0);
  const auto fine = lowest_eigenvalues(discretize(graph, 64), 50.0);
  ASSERT_GE(coarse.size(), 3u);
  ASSERT_GE(fine.size(), 3u);
  for (int k = 1; k <= 2; ++k) {
    const double exact = k * k * pi2;
    const double ratio = (exact - coarse[k]) / (exact - fine[k]);
    EXPECT_NEAR(ratio, 4.0, 0.05);
    const auto rich = richardson({coarse[k]}, {fine[k]});
    EXPECT_LT(std::abs(rich[0] - exact), 1e-2 * std::abs(fine[k] - exact));
  }
}

TEST(Oracle, ClosedFormsVerifiedOnSmallGraphs) {
  for (const auto& [j, n] : std::vector<std::pair<std::string, int>>{{"2", 1}, {"2", 2}, {"3", 1}, {"3", 2}}) {
    const auto seq = parse_sequence(j);
    const auto run = run_oracle(build_graph(seq, n), finite_spectrum(seq, n, 400.0), 512);
    EXPECT_TRUE(run.report.all_matched()) << "j=" << j << " n=" << n;
    EXPECT_LT(run.report.max_rel_err(), 1e-6);
  }
}

TEST(Oracle, PlatedFamiliesVerifiedOnLevelTwo) {
  const auto cfg = plate_config(5, 3);
  const auto run = run_oracle(build_plated_graph(cfg, 2), plated_spectrum(cfg, 2000.0, 2), 512);
  EXPECT_TRUE(run.report.all_matched());
  EXPECT_GT(run.report.rows.size(), 5u);
}

TEST(Oracle, ReportsDeficitAndSurplus) {
  const auto closed = finite_spectrum(parse_sequence("2"), 1, 100.0);
  std::vector<double> oracle;
  for (const auto& e : closed.entries) {
    for (std::int64_t i = 0; i < e.multiplicity; ++i) oracle.push_back(e.lambda);
  }
  const auto ok = verify_spectrum(closed, oracle);
  EXPECT_TRUE(ok.all_matched());
  oracle.erase(oracle.begin() + 1);
  oracle.push_back(55.0);
  oracle.push_back(250.0);
  const auto bad = verify_spectrum(closed, oracle);
  EXPECT_FALSE(bad.all_matched());
  EXPECT_EQ(bad.mismatches(), 2u);
  const auto json = to_json(bad);
  EXPECT_EQ(json["mismatches"], 2);
  EXPECT_EQ(json["entries"][1]["status"], "deficit");
}

TEST(Oracle, Guards) {
  const auto graph = build_graph(parse_sequence("2"), 4);
  EXPECT_THROW(run_oracle(graph, finite_spectrum(parse_sequence("2"), 4, 50.0), 64), ResourceError);
  const auto small = build_graph(parse_sequence("2"), 1);
  const auto closed = finite_spectrum(parse_sequence("2"), 1, 50.0);
  EXPECT_THROW(run_oracle(small, closed, 7), ValidationError);
  EXPECT_THROW(run_oracle(small, closed, 4), ValidationError);
  EXPECT_THROW(discretize(small, 2), ValidationError);
  EXPECT_THROW(richardson({1.0, 2.0}, {1.0}), ValidationError);
  EXPECT_THROW(lowest_eigenvalues(discretize(small, 8), -1.0), ValidationError);
}

}  // namespace
}  // namespace laakso
