#include "logburn/birational.hpp"

#include "logburn/error.hpp"

#include <algorithm>

namespace logburn {

namespace {

using Key = std::pair<std::string, Generator>;

std::vector<Key> divisor_multiset(const MorphismData& f) {
  std::vector<Key> keys;
  for (const auto& e : f.exceptional) keys.emplace_back(e.divisor->id, e.residue);
  std::sort(keys.begin(), keys.end());
  return keys;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw ValidationError(message);
}

}  // namespace

void MorphismData::validate() const {
  const int n = target.degree();
  require(source.degree() == n, "morphism source " + source.str() + " and target " +
                                    target.str() + " have different degrees");
  for (const auto& e : exceptional) {
    require(e.divisor != nullptr, "exceptional divisor without atom");
    require(e.divisor->dim == n - 1,
            "exceptional divisor '" + e.divisor->id + "' must have dimension " + std::to_string(n - 1));
    require(e.residue.degree() == n - 1, "residue label " + e.residue.str() + " of '" +
                                             e.divisor->id + "' must have degree " +
                                             std::to_string(n - 1));
  }
}

void RoofPresentation::validate() const {
  p.validate();
  q.validate();
  require(p.source == q.source, "roof legs start at different classes " + p.source.str() +
                                    " and " + q.source.str());
  require(p.target == x, "leg p must end at x = " + x.str());
  require(q.target == y, "leg q must end at y = " + y.str());
}

Element c_morphism(const MorphismData& f) {
  f.validate();
  Element out;
  for (const auto& e : f.exceptional) out.add_term(e.residue, 1);
  return out;
}

MorphismData compose_morphisms(const MorphismData& first, const MorphismData& second) {
  first.validate();
  second.validate();
  require(first.target == second.source, "cannot compose: " + first.target.str() + " vs " +
                                             second.source.str());
  MorphismData out{first.source, second.target, first.exceptional};
  out.exceptional.insert(out.exceptional.end(), second.exceptional.begin(),
                         second.exceptional.end());
  return out;
}

Element c_invariant(const RoofPresentation& roof) {
  roof.validate();
  return c_morphism(roof.q) - c_morphism(roof.p);
}

RoofPresentation identity_roof(const Generator& x) {
  MorphismData id{x, x, {}};
  return {x, x, id, id};
}

RoofPresentation inverse(const RoofPresentation& roof) { return {roof.y, roof.x, roof.q, roof.p}; }

RoofPresentation compose(const RoofPresentation& phi, const RoofPresentation& psi, const Glue& glue) {
  phi.validate();
  psi.validate();
  require(phi.y == psi.x, "cannot compose: phi ends at " + phi.y.str() + " but psi starts at " +
                              psi.x.str());
  require(glue.u.source == glue.v.source, "glue legs start at different classes");
  const MorphismData qu = compose_morphisms(glue.u, phi.q);
  const MorphismData rv = compose_morphisms(glue.v, psi.p);
  require(divisor_multiset(qu) == divisor_multiset(rv),
          "incompatible glue: q o u and r o v have different exceptional divisors");
  RoofPresentation out{phi.x, psi.y, compose_morphisms(glue.u, phi.p),
                       compose_morphisms(glue.v, psi.q)};
  out.validate();
  return out;
}

RoofPresentation composite(const RoofChain& chain) {
  if (chain.roofs.empty()) throw ArgumentError("empty chain");
  if (chain.glues.size() + 1 != chain.roofs.size())
    throw ArgumentError("a chain needs one glue per composition");
  RoofPresentation acc = chain.roofs.front();
  for (std::size_t i = 0; i < chain.glues.size(); ++i)
    acc = compose(acc, chain.roofs[i + 1], chain.glues[i]);
  return acc;
}

Element independence_defect(const RoofPresentation& first, const RoofPresentation& second,
                            const Glue& glue) {
  first.validate();
  second.validate();
  require(first.x == second.x && first.y == second.y, "roofs present maps between different classes");
  require(glue.u.source == glue.v.source, "glue legs start at different classes");
  require(divisor_multiset(compose_morphisms(glue.u, first.p)) ==
              divisor_multiset(compose_morphisms(glue.v, second.p)),
          "incompatible glue: p o u and r o v differ");
  require(divisor_multiset(compose_morphisms(glue.u, first.q)) ==
              divisor_multiset(compose_morphisms(glue.v, second.q)),
          "incompatible glue: q o u and s o v differ");
  return c_invariant(first) - c_invariant(second);
}

}  // namespace logburn
