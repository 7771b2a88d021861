#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "laakso/errors.hpp"
#include "laakso/spectrum.hpp"
#include "test_support.hpp"

namespace laakso {
namespace {

constexpr double pi2 = std::numbers::pi * std::numbers::pi;

std::vector<double> expand(const EnumeratedSpectrum& spec) {
  std::vector<double> out;
  for (const auto& e : spec.entries) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.lambda);
  return out;
}

TEST(Spectrum, FreeLowEnd) {
  const auto spec = free_spectrum(parse_sequence("2"), 15.0);
  ASSERT_EQ(spec.entries.size(), 2u);
  EXPECT_EQ(spec.entries[0].lambda, 0.0);
  EXPECT_EQ(spec.entries[0].multiplicity, 1);
  EXPECT_NEAR(spec.entries[1].lambda, pi2, 1e-12);
  EXPECT_EQ(spec.entries[1].multiplicity, 3);
  EXPECT_EQ(spec.entries[1].symbolic(), "(1/1*pi)^2");
}

TEST(Spectrum, NeumannIntervalAtLevelZero) {
  const auto spec = finite_spectrum(parse_sequence("2"), 0, 50.0);
  ASSERT_EQ(spec.entries.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(spec.entries[k].frequency, Rational(static_cast<long>(k)));
    EXPECT_EQ(spec.entries[k].multiplicity, 1);
  }
}

TEST(Spectrum, FiniteGraphsMatchExactGraphSpectrum) {
  for (const auto& ref : test::oracle_values()["eigenvalues"]) {
    const auto seq = test::sequence_of(ref["j"]);
    const int n = ref["n"].get<int>();
    const auto closed = expand(finite_spectrum(seq, n, ref["cutoff"].get<double>()));
    const auto exact = ref["values"].get<std::vector<double>>();
    ASSERT_EQ(closed.size(), exact.size()) << seq.to_string() << " n=" << n;
    for (std::size_t i = 0; i < exact.size(); ++i) {
      EXPECT_NEAR(closed[i], exact[i], 1e-9 * std::max(1.0, exact[i])) << seq.to_string() << " n=" << n;
    }
  }
}

TEST(Spectrum, CountingFunctionIsBoundedByCutoff) {
  const auto spec = finite_spectrum(parse_sequence("3"), 2, 400.0);
  EXPECT_EQ(counting_function(spec, 0.0), 1);
  EXPECT_EQ(counting_function(spec, 400.0), spec.total_multiplicity());
  EXPECT_THROW(counting_function(spec, 401.0), ValidationError);
  std::int64_t previous = 0;
  for (double lambda = 0.0; lambda <= 400.0; lambda += 7.5) {
    const auto count = counting_function(spec, lambda);
    EXPECT_GE(count, previous);
    previous = count;
  }
}

TEST(Spectrum, EntriesStrictlyIncreasingAndMerged) {
  const auto spec = free_spectrum(parse_sequence("2,3"), 2000.0);
  for (std::size_t i = 1; i < spec.entries.size(); ++i) {
    EXPECT_LT(spec.entries[i - 1].frequency, spec.entries[i].frequency);
    EXPECT_GT(spec.entries[i].multiplicity, 0);
  }
}

TEST(Spectrum, FiniteSpectraAreNested) {
  const auto seq = parse_sequence("2");
  const auto lower = finite_spectrum(seq, 2, 600.0);
  const auto upper = finite_spectrum(seq, 3, 600.0);
  for (const auto& e : lower.entries) {
    auto it = std::find_if(upper.entries.begin(), upper.entries.end(),
                           [&](const SpectrumEntry& u) { return u.frequency == e.frequency; });
    ASSERT_NE(it, upper.entries.end());
    EXPECT_GE(it->multiplicity, e.multiplicity);
  }
}

TEST(Spectrum, PlatedFamiliesAreTen) {
  const auto fams = family_stream(PlatedSource{plate_config(5, 3), std::nullopt});
  ASSERT_EQ(fams.size(), 10u);
  EXPECT_EQ(fams[0].side, Side::inner);
  EXPECT_EQ(fams[1].side, Side::outer);
  const auto spec = plated_spectrum(plate_config(5, 3), 400.0, 2);
  EXPECT_EQ(spec.op, Operator::plated);
  EXPECT_GT(spec.total_multiplicity(), 0);
  EXPECT_GT(spec.entries.front().lambda, 0.0);
}

TEST(Spectrum, DirichletEndsDropTheZeroMode) {
  const auto fams = family_stream(FreeSource{parse_sequence("2"), std::nullopt, true});
  ASSERT_EQ(fams.size(), 5u);
  EXPECT_EQ(fams[0].k_min, 1);
  EXPECT_EQ(fams[1].offset, Rational(0));
}

TEST(Spectrum, MultiplicityRuleRejectsNegativeCounts) {
  auto fam = family_stream(FreeSource{parse_sequence("2"), std::nullopt, false})[3];
  fam.terms = {MultiplicityTerm{Rational(-1), 0, 0, 0, false}};
  EXPECT_THROW(fam.multiplicity(2), MultiplicityError);
  fam.terms = {MultiplicityTerm{Rational(1, 3), 0, 0, 0, false}};
  EXPECT_THROW(fam.multiplicity(2), MultiplicityError);
}

TEST(Spectrum, FamilyTextIsReadable) {
  const auto fams = family_stream(FreeSource{parse_sequence("3"), std::nullopt, false});
  EXPECT_FALSE(fams[2].multiplicity_text().empty());
  EXPECT_FALSE(fams[4].scale_text().empty());
  EXPECT_EQ(fams[2].multiplicity(2), 6);
}

TEST(Spectrum, CsvHeader) {
  const auto csv = to_csv(free_spectrum(parse_sequence("2"), 15.0));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "lambda,multiplicity,symbolic");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

}  // namespace
}  // namespace laakso
