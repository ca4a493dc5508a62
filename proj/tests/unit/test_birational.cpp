#include "logburn/birational.hpp"
#include "logburn/error.hpp"
#include "logburn/random.hpp"

#include <gtest/gtest.h>

namespace logburn {
namespace {

AtomPtr atom(const std::string& id, int dim) {
  return std::make_shared<const Atom>(Atom{id, dim, false, std::nullopt});
}

Generator g(const std::string& id, int dim) { return Generator::of(atom(id, dim)); }

struct Surfaces {
  Generator x = g("X", 2), y = g("Y", 2), w = g("W", 2);
  ExceptionalDivisor e{atom("E", 1), g("L", 1)};
  ExceptionalDivisor d1{atom("D1", 1), Generator::T()};
  ExceptionalDivisor d2{atom("D2", 1), g("L", 1).times_eps()};
  RoofPresentation phi() const { return {x, y, {w, x, {e}}, {w, y, {d1, d2}}}; }
};

TEST(CMorphism, IsomorphismIsZero) {
  Surfaces s;
  EXPECT_TRUE(c_morphism({s.x, s.x, {}}).is_zero());
}

TEST(CMorphism, SingleDivisor) {
  Surfaces s;
  EXPECT_EQ(c_morphism({s.w, s.x, {s.e}}).str(), "[L]");
}

TEST(CMorphism, AdditiveUnderComposition) {
  Surfaces s;
  const MorphismData f{s.w, s.x, {s.e}};
  const MorphismData h{g("V", 2), s.w, {s.d1}};
  EXPECT_EQ(c_morphism(compose_morphisms(h, f)), c_morphism(h) + c_morphism(f));
}

TEST(CMorphism, RejectsWrongDegrees) {
  Surfaces s;
  EXPECT_THROW(c_morphism({s.w, s.x, {{atom("E", 0), g("L", 1)}}}), ValidationError);
  EXPECT_THROW(c_morphism({s.w, g("Z", 3), {}}), ValidationError);
}

TEST(CInvariant, Values) {
  Surfaces s;
  EXPECT_EQ(c_invariant(s.phi()).str(), "T - [L] + [L] * eps");
  EXPECT_TRUE(c_invariant(identity_roof(s.x)).is_zero());
  EXPECT_EQ(c_invariant(inverse(s.phi())), -c_invariant(s.phi()));
}

TEST(CInvariant, RoofMismatch) {
  Surfaces s;
  RoofPresentation bad = s.phi();
  bad.q.source = g("W2", 2);
  EXPECT_THROW(c_invariant(bad), ValidationError);
}

TEST(Compose, WithIdentityAndInverse) {
  Surfaces s;
  const RoofPresentation phi = s.phi();
  const MorphismData id_w{s.w, s.w, {}};
  EXPECT_EQ(c_invariant(compose(phi, identity_roof(s.y), {id_w, phi.q})), c_invariant(phi));
  EXPECT_TRUE(c_invariant(compose(phi, inverse(phi), {id_w, id_w})).is_zero());
}

TEST(Compose, RejectsIncompatibleGlue) {
  Surfaces s;
  const RoofPresentation phi = s.phi();
  const MorphismData id_w{s.w, s.w, {}};
  // q o u has D1, D2 but r o v = id o id has none.
  EXPECT_THROW(compose(phi, identity_roof(s.y), {id_w, id_w}), ValidationError);
  EXPECT_THROW(compose(phi, identity_roof(s.x), {id_w, phi.q}), ValidationError);
}

TEST(Compose, ThreeFoldChainIsAdditive) {
  random::Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const RoofChain chain = random::random_chain(rng, 3, 2);
    Element sum;
    for (const auto& r : chain.roofs) sum += c_invariant(r);
    EXPECT_EQ(c_invariant(composite(chain)), sum);
  }
}

TEST(Independence, RefinedRoofGivesSameInvariant) {
  Surfaces s;
  const RoofPresentation phi = s.phi();
  const Generator u = g("U", 2);
  const MorphismData up{u, s.w, {{atom("Z", 1), g("M", 1)}}};
  const RoofPresentation finer{s.x, s.y, compose_morphisms(up, phi.p), compose_morphisms(up, phi.q)};
  EXPECT_EQ(c_invariant(finer), c_invariant(phi));
  EXPECT_TRUE(independence_defect(phi, finer, {up, {u, u, {}}}).is_zero());
}

}  // namespace
}  // namespace logburn
