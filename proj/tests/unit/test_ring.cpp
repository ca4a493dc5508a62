#include "logburn/error.hpp"
#include "logburn/random.hpp"
#include "logburn/ring.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace logburn {
namespace {

AtomPtr atom(const std::string& id, int dim, bool self_dual = false) {
  return std::make_shared<const Atom>(Atom{id, dim, self_dual, std::nullopt});
}

Generator gen(std::vector<AtomPtr> atoms, int eps = 0, int tpow = 0) {
  std::vector<RawAtom> raw;
  for (auto& a : atoms) raw.push_back({a, false});
  return Generator::normalize(raw, eps, tpow);
}

// Sign of sorting `dims` (keyed by `ids`) by adjacent transpositions, each
// contributing (-1)^(m n): returns the eps exponent.
int bubble_sign(std::vector<std::pair<std::string, int>> items) {
  int eps = 0;
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j + 1 < items.size() - i; ++j)
      if (items[j + 1].first < items[j].first) {
        eps += items[j].second * items[j + 1].second;
        std::swap(items[j], items[j + 1]);
      }
  return eps % 2;
}

TEST(Dyadic, ReducesAndRenders) {
  EXPECT_EQ(Dyadic(6, 2).str(), "3/2^1");
  EXPECT_EQ(Dyadic(4, 2).str(), "1");
  EXPECT_EQ(Dyadic(-3, 0).str(), "-3");
  EXPECT_EQ(Dyadic(1).half().half().str(), "1/2^2");
  EXPECT_EQ(Dyadic::parse("5/2^3"), Dyadic(5, 3));
  EXPECT_EQ(Dyadic::parse("-7"), Dyadic(-7));
  Dyadic x = Dyadic(3, 1);
  x += Dyadic(1, 1);
  EXPECT_EQ(x, Dyadic(2));
  EXPECT_THROW(Dyadic::parse("1/3"), Error);
}

TEST(Dyadic, HandlesBigIntegers) {
  Dyadic x(1);
  for (int i = 0; i < 100; ++i) x *= Dyadic(2);
  EXPECT_EQ(x.str(), "1267650600228229401496703205376");
}

TEST(Normalize, EpsSquaredIsOne) { EXPECT_EQ(Generator::normalize({}, 2, 0), Generator::unit()); }

TEST(Normalize, EpsTimesTIsT) {
  const Generator g = Generator::normalize({}, 1, 1);
  EXPECT_EQ(g, Generator::T());
  EXPECT_EQ(g.str(), "T");
}

TEST(Normalize, TranspositionOfOddAtomsGivesEps) {
  auto a = atom("a", 1), b = atom("b", 1);
  const Generator g = gen({b, a});
  EXPECT_EQ(g.atoms().size(), 2u);
  EXPECT_EQ(g.atoms()[0]->id, "a");
  EXPECT_EQ(g.eps(), 1);
  EXPECT_EQ(g.tpow(), 0);
}

TEST(Normalize, NegationFlagsFoldIntoEps) {
  auto a = atom("a", 2);
  const RawAtom raw[] = {{a, true}};
  EXPECT_EQ(Generator::normalize(raw, 0, 0), gen({a}, 1));
  const RawAtom twice[] = {{a, true}, {a, true}};
  EXPECT_EQ(Generator::normalize(twice, 0, 0), gen({a, a}));
}

TEST(Normalize, SelfDualAtomAbsorbsEps) {
  auto s = atom("s", 1, true);
  EXPECT_EQ(gen({s}, 1), gen({s}));
  EXPECT_TRUE(gen({s}).absorbs_eps());
}

TEST(Normalize, RepeatedOddAtomAbsorbsEps) {
  auto a = atom("a", 1);
  EXPECT_EQ(gen({a, a}, 1), gen({a, a}));
  auto c = atom("c", 2);
  EXPECT_NE(gen({c, c}, 1), gen({c, c}));
}

TEST(Normalize, UnknownAtomIsRegistryError) {
  AtomRegistry reg;
  reg.declare(Atom{"a", 1, false, std::nullopt});
  const std::pair<std::string, bool> raw[] = {{"zz", false}};
  EXPECT_THROW(Generator::normalize(reg, raw, 0, 0), RegistryError);
}

TEST(Normalize, IsIdempotent) {
  random::Rng rng(5);
  std::vector<AtomPtr> pool = {atom("a", 1), atom("b", 2), atom("c", 3), atom("d", 0)};
  for (int i = 0; i < 200; ++i) {
    std::vector<RawAtom> raw;
    for (int k = rng.between(0, 4); k > 0; --k) raw.push_back({pool[rng.below(pool.size())], rng.chance(1, 3)});
    const Generator g = Generator::normalize(raw, rng.between(0, 3), rng.between(0, 2));
    std::vector<RawAtom> again;
    for (const auto& a : g.atoms()) again.push_back({a, false});
    EXPECT_EQ(Generator::normalize(again, g.eps(), g.tpow()), g);
  }
}

TEST(Normalize, SignMatchesBubbleSortOracle) {
  random::Rng rng(9);
  std::vector<AtomPtr> pool = {atom("a", 1), atom("b", 2), atom("c", 3), atom("d", 1), atom("e", 0)};
  for (int i = 0; i < 300; ++i) {
    std::vector<AtomPtr> chosen = pool;
    for (std::size_t k = chosen.size(); k > 1; --k) std::swap(chosen[k - 1], chosen[rng.below(k)]);
    chosen.resize(static_cast<std::size_t>(rng.between(1, 5)));
    std::vector<std::pair<std::string, int>> items;
    for (const auto& a : chosen) items.emplace_back(a->id, a->dim);
    EXPECT_EQ(gen(chosen).eps(), bubble_sign(items));
  }
}

TEST(Element, AddCollectsTerms) {
  EXPECT_EQ((Element::T() + Element::T()).str(), "2 * T");
  EXPECT_EQ((Element::one() + Element::eps()) + (Element::one() - Element::eps()), Element(Generator::unit(), 2));
  const Element x = Element::T() + Element::eps();
  EXPECT_TRUE((x + (-x)).is_zero());
  EXPECT_EQ(Element().str(), "0");
}

TEST(Element, MixedDomainsAreRejected) {
  EXPECT_THROW(Element::one() + Element::one(CoeffDomain::Dyadic), DomainError);
  EXPECT_THROW(Element::one() * Element::one(CoeffDomain::Dyadic), DomainError);
  EXPECT_THROW(Element::one().half(), DomainError);
}

TEST(Element, MultiplicationRelations) {
  EXPECT_EQ(Element::T() * Element::T(), Element::T(2));
  const Element one_eps = Element::one() + Element::eps();
  EXPECT_EQ(one_eps * one_eps, Element(Generator::unit(), 2) + Element(Generator::epsilon(), 2));
  auto a = atom("a", 1), b = atom("b", 3);
  EXPECT_EQ(Element(Generator::of(b)) * Element(Generator::of(a)),
            (Element(Generator::of(a)) * Element(Generator::of(b))).times_eps());
  auto c = atom("c", 2);
  EXPECT_EQ(Element(Generator::of(c)) * Element(Generator::of(a)),
            Element(Generator::of(a)) * Element(Generator::of(c)));
}

TEST(Element, TAndEpsAreCentral) {
  random::Rng rng(3);
  std::vector<AtomPtr> pool = {atom("a", 1), atom("b", 2), atom("c", 1, true)};
  for (int i = 0; i < 100; ++i) {
    const Element x = random::random_element(rng, pool, {});
    EXPECT_EQ(x * Element::T(), Element::T() * x);
    EXPECT_EQ(x * Element::eps(), Element::eps() * x);
  }
}

TEST(Element, IsAssociative) {
  random::Rng rng(4);
  std::vector<AtomPtr> pool = {atom("a", 1), atom("b", 2), atom("c", 3)};
  for (int i = 0; i < 100; ++i) {
    const Element x = random::random_element(rng, pool, {});
    const Element y = random::random_element(rng, pool, {});
    const Element z = random::random_element(rng, pool, {});
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
  }
}

TEST(Element, HomogeneousPart) {
  const Element x = Element::one() + Element::T();
  EXPECT_EQ(homogeneous_part(x, 1), Element::T());
  EXPECT_EQ(homogeneous_part(x, 0), Element::one());
  EXPECT_TRUE(homogeneous_part(Element(), 3).is_zero());
  EXPECT_EQ(x.degree(), std::nullopt);
  EXPECT_EQ(Element::T(3).degree(), 3);
}

TEST(Element, CanonicalRendering) {
  auto a = atom("a", 1), b = atom("b", 1);
  Element x = Element(gen({a, b}, 1, 0), -3) + Element::T(2) + Element::one() + Element::eps();
  EXPECT_EQ(x.str(), "1 + eps + T^2 - 3 * [a*b] * eps");
  const Element d = Element(Generator::T(), Dyadic(3, 2), CoeffDomain::Dyadic);
  EXPECT_EQ(d.str(), "3/2^2 * T");
  EXPECT_EQ((-Element::T()).str(), "-T");
}

}  // namespace
}  // namespace logburn
