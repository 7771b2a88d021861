#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "laakso/format.hpp"
#include "laakso/graph.hpp"
#include "laakso/parallel.hpp"
#include "laakso/spectrum.hpp"
#include "laakso/zeta.hpp"

namespace laakso {
namespace {

constexpr std::uint64_t seed = 20240611;

JSequence random_sequence(std::mt19937_64& rng, int max_entry = 5) {
  std::uniform_int_distribution<int> period(1, 3);
  std::uniform_int_distribution<int> entry(2, max_entry);
  std::vector<int> v(static_cast<std::size_t>(period(rng)));
  for (auto& e : v) e = entry(rng);
  const int n = static_cast<int>(v.size());
  return make_sequence(std::move(v), n);
}

// Vertex count of F_n by merging (sheet, grid point) pairs directly.
std::size_t quotient_vertex_count(const JSequence& seq, int n) {
  const auto dn = static_cast<std::size_t>(checked_d(seq, n));
  const std::size_t sheets = std::size_t{1} << n;
  std::vector<std::size_t> parent(sheets * (dn + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 1; i <= n; ++i) {
    const auto di = static_cast<std::size_t>(checked_d(seq, i));
    const auto dprev = static_cast<std::size_t>(checked_d(seq, i - 1));
    for (std::size_t m = 1; m < di; ++m) {
      if ((m * dprev) % di == 0) continue;
      const std::size_t t = m * (dn / di);
      for (std::size_t s = 0; s < sheets; ++s) {
        const auto a = find(s * (dn + 1) + t);
        const auto b = find((s ^ (std::size_t{1} << (i - 1))) * (dn + 1) + t);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::size_t roots = 0;
  for (std::size_t a = 0; a < parent.size(); ++a) roots += find(a) == a;
  return roots;
}

TEST(Properties, GraphsMatchQuotientConstruction) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 25; ++trial) {
    const auto seq = random_sequence(rng);
    const int n = std::uniform_int_distribution<int>(0, 3)(rng);
    const auto graph = build_graph(seq, n);
    EXPECT_EQ(graph.vertices.size(), quotient_vertex_count(seq, n)) << seq.to_string() << " n=" << n;
    EXPECT_EQ(graph.edges.size(), (std::size_t{1} << n) * static_cast<std::size_t>(checked_d(seq, n)));
    EXPECT_TRUE(graph.is_connected());
  }
}

TEST(Properties, MultiplicitiesAreNonNegativeIntegers) {
  std::mt19937_64 rng(seed + 1);
  for (int trial = 0; trial < 25; ++trial) {
    const auto seq = random_sequence(rng, 9);
    for (const auto& f : family_stream(FreeSource{seq, std::nullopt, false})) {
      for (int n = f.n_min; n <= f.n_min + 6; ++n) EXPECT_GE(f.multiplicity(n), 0);
    }
    const int j = std::uniform_int_distribution<int>(3, 12)(rng);
    const int Z = std::uniform_int_distribution<int>(1, j - 2)(rng);
    for (const auto& f : family_stream(PlatedSource{plate_config(j, Z), std::nullopt})) {
      for (int n = f.n_min; n <= f.n_min + 5; ++n) EXPECT_GE(f.multiplicity(n), 0);
    }
  }
}

TEST(Properties, FiniteZetaGrowsWithLevel) {
  std::mt19937_64 rng(seed + 2);
  std::uniform_real_distribution<double> sigma(1.5, 3.0);
  for (int trial = 0; trial < 10; ++trial) {
    const auto seq = random_sequence(rng);
    const double s = sigma(rng);
    double previous = 0.0;
    for (int m = 0; m <= 5; ++m) {
      const double v = zeta_finite(seq, m, s).real();
      EXPECT_GT(v, previous);
      previous = v;
    }
    EXPECT_GE(zeta_laakso_closed(seq, s).real(), previous * (1.0 - 1e-14));
  }
}

TEST(Properties, ZetaConjugateSymmetry) {
  std::mt19937_64 rng(seed + 3);
  std::uniform_real_distribution<double> re(0.8, 3.0);
  std::uniform_real_distribution<double> im(-20.0, 20.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto seq = random_sequence(rng);
    const std::complex<double> s(re(rng), im(rng));
    const auto a = zeta_laakso_closed(seq, std::conj(s));
    const auto b = std::conj(zeta_laakso_closed(seq, s));
    EXPECT_LE(std::abs(a - b), 1e-12 * std::max(1.0, std::abs(b)));
  }
}

TEST(Properties, TextRoundTrips) {
  std::mt19937_64 rng(seed + 4);
  std::uniform_int_distribution<long> num(-1'000'000, 1'000'000);
  std::uniform_int_distribution<long> den(1, 1'000'000);
  std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
  std::uniform_int_distribution<int> exponent(-300, 300);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational r(num(rng), den(rng));
    EXPECT_EQ(parse_rational(to_string(r)), r);
    const double x = std::ldexp(mantissa(rng), exponent(rng));
    EXPECT_EQ(std::stod(format_double(x)), x);
    const std::complex<double> z(x, mantissa(rng));
    EXPECT_EQ(parse_complex(format_complex(z)), z);
  }
}

TEST(Properties, ParallelForVisitsEachIndexOnce) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  EXPECT_GE(thread_count(), 1u);
  try {
    parallel_for(100, [](std::size_t i) {
      if (i % 10 == 3) throw std::runtime_error(std::to_string(i));
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "3");
  }
}

}  // namespace
}  // namespace laakso
