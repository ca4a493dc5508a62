#include "logburn/error.hpp"
#include "logburn/random.hpp"
#include "logburn/residue.hpp"
#include "logburn/snc_complex.hpp"
#include "logburn/two_local.hpp"

#include <gtest/gtest.h>

namespace logburn {
namespace {

const CoeffDomain kD = CoeffDomain::Dyadic;

TEST(SectorSplit, OnePlusEps) {
  const SectorSplit s = sector_split(Element::one() + Element::eps());
  EXPECT_EQ(s.plus.str(), "2");
  EXPECT_TRUE(s.minus.is_zero());
}

TEST(SectorSplit, TVanishesInMinusSector) {
  const SectorSplit s = sector_split(Element::T());
  EXPECT_EQ(s.plus.str(), "T");
  EXPECT_TRUE(s.minus.is_zero());
}

TEST(SectorSplit, Eps) {
  const SectorSplit s = sector_split(Element::eps());
  EXPECT_EQ(s.plus.str(), "1");
  EXPECT_EQ(s.minus.str(), "-1");
}

TEST(SectorSplit, ReconstructsRandomElements) {
  random::Rng rng(2);
  std::vector<AtomPtr> pool = {std::make_shared<const Atom>(Atom{"a", 1, false, std::nullopt}),
                               std::make_shared<const Atom>(Atom{"b", 2, false, std::nullopt}),
                               std::make_shared<const Atom>(Atom{"s", 1, true, std::nullopt})};
  for (int i = 0; i < 100; ++i) {
    const Element x = random::random_element(rng, pool, {4, 3, 2, kD});
    EXPECT_EQ(reconstruct(sector_split(x)), x);
  }
}

TEST(InvolutionF, OnTAndOne) {
  const Universe u;
  EXPECT_EQ(involution_F(SectorElement::project(Element::T(), 1), u).str(), "-T");
  EXPECT_EQ(involution_F(SectorElement::project(Element::one(), 1), u).str(), "1");
}

TEST(PlusMinusSplit, OfTAndOne) {
  const Universe u;
  const PlusMinusSplit t = plus_minus_split(SectorElement::project(Element::T(), 1), u);
  EXPECT_TRUE(t.bplus.is_zero());
  EXPECT_EQ(t.bminus.str(), "T");
  const PlusMinusSplit one = plus_minus_split(SectorElement::project(Element::one(), 1), u);
  EXPECT_EQ(one.bplus.str(), "1");
  EXPECT_TRUE(one.bminus.is_zero());
}

TEST(InvolutionF, RequiresPlusSector) {
  EXPECT_THROW(involution_F(SectorElement::project(Element::one(), -1), Universe{}), Error);
}

TEST(SectorAlgebra, ToricUniverse) {
  Universe u;
  // x behaves like T^3; y like T^2.
  u.declare(Atom{"x", 3, false, std::nullopt});
  u.declare(Atom{"y", 2, false, std::nullopt});
  u.set_boundary("x", boundary_of_T_power(3));
  u.set_boundary("y", boundary_of_T_power(2));
  const SectorAlgebraReport r = check_sector_algebra(u, 100, 1);
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(SectorAlgebra, RandomComplexUniverses) {
  random::Rng rng(12);
  for (int i = 0; i < 5; ++i) {
    const Universe u = universe_from_complex(random::random_complex(rng, {1, 4, 4, "x", true}));
    const SectorAlgebraReport r = check_sector_algebra(u, 100, rng.next());
    for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  }
}

TEST(SectorAlgebra, DetectsPerturbedBoundary) {
  random::Rng rng(13);
  const SncComplex k = random::random_complex(rng, {3, 4, 4, "x", true});
  Universe u = universe_from_complex(k);
  AtomPtr a;
  for (const auto& [face, comps] : k.faces())
    if (face.size() == 1 && !comps.front().label.atoms().empty()) a = comps.front().label.atoms().front();
  ASSERT_NE(a, nullptr);
  u.override_boundary(a->id, u.boundary_of(*a) + Element::T(a->dim - 1));
  const SectorAlgebraReport r = check_sector_algebra(u, 100, 1);
  EXPECT_FALSE(r.ok());
}

}  // namespace
}  // namespace logburn
