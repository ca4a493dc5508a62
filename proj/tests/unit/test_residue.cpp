#include "logburn/error.hpp"
#include "logburn/residue.hpp"
#include "logburn/snc_complex.hpp"

#include <gtest/gtest.h>

namespace logburn {
namespace {

// d(T^n) from d(T) = 1 + eps by repeated twisted Leibniz expansion, using
// only ring multiplication.
Element leibniz_oracle(int n) {
  const Element dT = Element::one() + Element::eps();
  Element d = dT;  // d(T^1)
  for (int k = 2; k <= n; ++k) {
    // a = T^(k-1), b = T of degree 1.
    d = d.times_eps() * Element::T() + Element::T(k - 1) * dT - Element::T() * d * dT;
  }
  return d;
}

TEST(Boundary, OfT) { EXPECT_EQ(boundary(Element::T(), Universe{}).str(), "1 + eps"); }

TEST(Boundary, OfTPowers) {
  EXPECT_TRUE(boundary(Element::T(2), Universe{}).is_zero());
  EXPECT_EQ(boundary(Element::T(3), Universe{}).str(), "2 * T^2");
}

TEST(Boundary, TPowersMatchLeibnizExpansion) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(boundary(Element::T(n), Universe{}), leibniz_oracle(n)) << n;
}

TEST(Boundary, OfTTimesTByLeibniz) {
  // eps(1 + eps)T + T(1 + eps) - T(1 + eps)(1 + eps)
  EXPECT_TRUE(leibniz_rhs(Element::T(), Element::T(), Universe{}).is_zero());
}

TEST(Boundary, UnknownAtomIsReported) {
  Universe u;
  u.declare(Atom{"a", 2, false, std::nullopt});
  try {
    boundary(Element(Generator::of(u.registry().at("a"))), u);
    FAIL() << "expected UnknownBoundaryError";
  } catch (const UnknownBoundaryError& e) {
    EXPECT_EQ(e.atom(), "a");
  }
}

TEST(Boundary, PointsAreClosed) {
  Universe u;
  const AtomPtr p = u.declare(Atom{"p", 0, false, std::nullopt});
  EXPECT_TRUE(boundary(Element(Generator::of(p)), u).is_zero());
}

TEST(Universe, RejectsWrongDegree) {
  Universe u;
  u.declare(Atom{"a", 2, false, std::nullopt});
  EXPECT_THROW(u.set_boundary("a", Element::T(2)), Error);
}

TEST(VerifyDd0, TPowersAndZero) {
  for (int n = 0; n <= 8; ++n) EXPECT_TRUE(verify_dd0(Element::T(n), Universe{}).ok());
  EXPECT_TRUE(verify_dd0(Element(), Universe{}).ok());
}

TEST(VerifyDd0, TopOfTwoVertexComplex) {
  Universe u;
  auto decl = [&](const char* id, int dim) { return u.declare(Atom{id, dim, false, std::nullopt}); };
  const AtomPtr top = decl("top", 2), a = decl("A", 1), b = decl("B", 1), p = decl("P", 0);
  u.set_boundary("top", Element(Generator::of(a)) + Element(Generator::of(b)) -
                            Element(Generator::of(p)).times_T());
  u.set_boundary("A", Element(Generator::of(p)).times_eps());
  u.set_boundary("B", Element(Generator::of(p)));
  EXPECT_TRUE(verify_dd0(Element(Generator::of(top)), u).ok());
  // Without the shuffle sign the residual is nonzero.
  u.override_boundary("A", Element(Generator::of(p)));
  EXPECT_EQ(verify_dd0(Element(Generator::of(top)), u).residual.str(), "[P] - [P] * eps");
}

TEST(VerifyLeibniz, TTimesT) {
  const LeibnizReport r = verify_leibniz(Element::T(), Element::T(), Universe{});
  EXPECT_TRUE(r.ok());
  ASSERT_TRUE(r.times_T_difference.has_value());
}

TEST(VerifyLeibniz, RejectsInhomogeneousInput) {
  EXPECT_THROW(verify_leibniz(Element::one() + Element::T(), Element::T(), Universe{}), ArgumentError);
}

TEST(VerifyLeibniz, TopOfToricComplexTimesT) {
  const SncComplex k = toric_complex(2);
  Universe u;
  const AtomPtr x = u.declare(Atom{"x", 2, false, std::nullopt});
  u.set_boundary("x", residue_element(k));
  const LeibnizReport r = verify_leibniz(Element(Generator::of(x)), Element::T(), u);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.times_T_difference->is_zero());
}

TEST(VerifyLeibniz, ProductOfTwoDivisorComplexes) {
  auto make = [](const std::string& prefix) {
    auto top = std::make_shared<const Atom>(Atom{prefix + "X", 1, false, std::nullopt});
    auto d = std::make_shared<const Atom>(Atom{prefix + "D", 0, false, std::nullopt});
    SncComplex::FaceMap faces;
    faces[{0}] = {Component{"c", Generator::of(d), {}}};
    return SncComplex(1, {prefix + "v"}, Generator::of(top), faces);
  };
  const SncComplex k = make("k"), l = make("l");
  Universe u = universe_from_complex(k);
  u.merge(universe_from_complex(l));
  EXPECT_TRUE(verify_leibniz_product(k, l, u).ok());
}

}  // namespace
}  // namespace logburn
