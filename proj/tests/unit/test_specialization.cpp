#include "logburn/error.hpp"
#include "logburn/random.hpp"
#include "logburn/specialization.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <optional>

namespace logburn {
namespace {

Generator g(const std::string& id, int dim) {
  return Generator::of(std::make_shared<const Atom>(Atom{id, dim, false, std::nullopt}));
}

DvrModel profile(std::vector<int> e, std::vector<int> d) {
  DvrModel m;
  m.n = 1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::string id = "a" + std::to_string(i + 1);
    m.vertical.push_back({id, e[i], d[i]});
    m.strata[{id}] = g("F" + id, 1);
  }
  return m;
}

// Least point of the grid {p/q : 1 <= q <= 6, |p/q| <= 8} satisfying every
// constraint k e + d >= -1.
Rational grid_kappa(const DvrModel& m) {
  std::optional<Rational> best;
  for (long long q = 1; q <= 6; ++q)
    for (long long p = -8 * q; p <= 8 * q; ++p) {
      const Rational k(p, q);
      bool ok = true;
      for (const auto& v : m.vertical) ok = ok && k * v.e + v.d >= Rational(-1);
      if (ok && (!best || k < *best)) best = k;
    }
  return *best;
}

TEST(Kappa, Examples) {
  EXPECT_EQ(kappa(profile({1}, {-1})), Rational(0));
  EXPECT_EQ(kappa(profile({1, 2}, {0, -1})), Rational(0));
  EXPECT_EQ(kappa(profile({2}, {0})), Rational(-1, 2));
  EXPECT_THROW(kappa(DvrModel{}), ArgumentError);
}

TEST(Kappa, MatchesGridOracle) {
  random::Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    std::vector<int> e, d;
    for (int k = rng.between(1, 4); k > 0; --k) {
      e.push_back(rng.between(1, 6));
      d.push_back(rng.between(-4, 4));
    }
    const DvrModel m = profile(e, d);
    EXPECT_EQ(kappa(m), grid_kappa(m));
  }
}

TEST(LogSubcomplex, Examples) {
  EXPECT_EQ(log_subcomplex(profile({1, 1}, {-1, -1})).a, (std::vector<std::string>{"a1", "a2"}));
  EXPECT_EQ(log_subcomplex(profile({1, 2}, {0, -1})).a, (std::vector<std::string>{"a2"}));
  DvrModel m = profile({1}, {-1});
  m.horizontal = {{"b1", -1}, {"b2", 0}};
  EXPECT_EQ(log_subcomplex(m).b, (std::vector<std::string>{"b1"}));
}

TEST(Specialize, SmoothReducedModel) {
  DvrModel m;
  m.n = 2;
  m.vertical = {{"a", 1, -1}};
  m.strata[{"a"}] = g("L", 2);
  EXPECT_EQ(specialize(m).str(), "[L]");
}

TEST(Specialize, TwoComponents) {
  DvrModel m = profile({1, 1}, {-1, -1});
  m.strata[{"a1", "a2"}] = g("Q", 0);
  EXPECT_EQ(specialize(m).str(), "[Fa1] + [Fa2] - [Q] * T");
  EXPECT_EQ(specialize(m), Element(g("Fa1", 1)) + Element(g("Fa2", 1)) - Element(g("Q", 0).times_T(1)));
}

TEST(Specialize, WithHorizontalComponent) {
  DvrModel m = profile({1}, {-1});
  m.horizontal = {{"b", -1}};
  m.strata[{"a1", "b"}] = g("R", 0);
  EXPECT_EQ(specialize(m), Element(g("Fa1", 1)) - Element(g("R", 0).times_T(1)));
}

TEST(Specialize, RequiresIntegralKappa) {
  EXPECT_THROW(specialize(profile({2}, {0})), IntegralityError);
}

TEST(Specialize, MissingLabel) {
  DvrModel m = profile({1, 1}, {-1, -1});
  m.strata.erase({"a2"});
  EXPECT_THROW(specialize(m), ModelError);
}

TEST(Validation, Errors) {
  DvrModel m = profile({1}, {-1});
  m.vertical[0].e = 0;
  EXPECT_THROW(m.validate(), ValidationError);
  m = profile({1}, {-1});
  m.horizontal = {{"b", -2}};
  EXPECT_THROW(m.validate(), ValidationError);
  m = profile({1, 1}, {-1, -1});
  m.strata[{"a1", "a2"}] = g("Q", 1);
  EXPECT_THROW(m.validate(), ValidationError);
  m = profile({1}, {-1});
  m.horizontal = {{"b", -1}};
  m.strata[{"b"}] = g("H", 1);
  EXPECT_THROW(m.validate(), ValidationError);
}

TEST(SpecializeEquivariant, TrivialDecorations) {
  DvrModel m = profile({1, 1}, {-1, -1});
  m.strata[{"a1", "a2"}] = g("Q", 0);
  m.horizontal = {{"b", -1}};
  m.strata[{"a1", "b"}] = g("R", 0);
  const Element eq = specialize_equivariant(m);
  EXPECT_EQ(eq, Element(g("Fa1", 1)) + Element(g("Fa2", 1)) - Element(g("Q", 0).times_T(1)));
  EXPECT_EQ(specialize(m) - eq, -Element(g("R", 0).times_T(1)));
}

TEST(SpecializeEquivariant, GcdDecoration) {
  DvrModel m = profile({2, 4}, {-1, -1});
  m.strata[{"a1", "a2"}] = g("Q", 0);
  // Thresholds 0 and 0: both components are in the log subcomplex.
  AtomRegistry decorated;
  const Element eq = specialize_equivariant(m, &decorated);
  EXPECT_EQ(eq.str(), "[Fa1#mu=2] + [Fa2#mu=4] - [Q#mu=2] * T");
  EXPECT_EQ(decorated.at("Q#mu=2")->mu_order, 2);
}

TEST(SpecializeEquivariant, RamifiedSingleComponent) {
  const DvrModel m = profile({2}, {0});
  EXPECT_EQ(kappa(m), Rational(-1, 2));
  EXPECT_EQ(specialize_equivariant(m).str(), "[Fa1#mu=2]");
}

TEST(SpecializeEquivariant, ForgettingDecorations) {
  DvrModel m = profile({2}, {0});
  AtomRegistry base;
  base.declare(m.strata.at({"a1"}).atoms().front());
  EXPECT_EQ(forget_decorations(specialize_equivariant(m), base).str(), "[Fa1]");
}

TEST(Specialize, IndependentOfListingOrder) {
  random::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    DvrModel m = random::random_model(rng, {});
    DvrModel r = m;
    std::reverse(r.vertical.begin(), r.vertical.end());
    std::reverse(r.horizontal.begin(), r.horizontal.end());
    EXPECT_EQ(specialize_equivariant(m), specialize_equivariant(r));
    if (kappa(m).denominator() == 1) EXPECT_EQ(specialize(m), specialize(r));
  }
}

}  // namespace
}  // namespace logburn
