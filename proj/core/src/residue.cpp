#include "logburn/residue.hpp"

#include "logburn/error.hpp"

namespace logburn {

Element boundary_of_T_power(int n, CoeffDomain domain) {
  if (n < 0) throw ArgumentError("negative T power");
  if (n == 0) return Element::zero(domain);
  Element out(domain);
  out.add_term(Generator::T(n - 1), 1);
  Generator twisted = Generator::T(n - 1).times_eps();
  out.add_term(twisted, n % 2 == 1 ? 1 : -1);
  return out;
}

namespace {

Element boundary_of_generator(const Generator& g, const Universe& universe, CoeffDomain domain) {
  Element prefix = Element::one(domain);
  Element d_prefix = Element::zero(domain);
  for (const auto& atom : g.atoms()) {
    Element d_atom = universe.boundary_of(*atom);
    if (domain == CoeffDomain::Dyadic) d_atom = d_atom.to_dyadic();
    const Generator b = Generator::of(atom);
    Element next = (atom->dim % 2 == 1 ? d_prefix.times_eps() : d_prefix).times(b);
    next += prefix * d_atom;
    next -= (d_prefix * d_atom).times_T(1);
    d_prefix = std::move(next);
    prefix = prefix.times(b);
  }
  const int k = g.tpow();
  Element out = d_prefix;
  if (k > 0) {
    if (k % 2 == 0) {
      out = d_prefix.times_T(k);
    } else {
      out = -d_prefix.times_T(k) + prefix * boundary_of_T_power(k, domain);
    }
  }
  return g.eps() == 1 ? out.times_eps() : out;
}

}  // namespace

Element boundary(const Element& x, const Universe& universe) {
  Element out(x.domain());
  for (const auto& [g, c] : x.terms()) out += c * boundary_of_generator(g, universe, x.domain());
  return out;
}

Dd0Report verify_dd0(const Element& x, const Universe& universe) {
  return {boundary(boundary(x, universe), universe)};
}

Element leibniz_rhs(const Element& a, const Element& b, const Universe& universe) {
  auto n = b.degree();
  if (!a.degree() || !n) throw ArgumentError("Leibniz check needs homogeneous elements");
  const Element da = boundary(a, universe);
  const Element db = boundary(b, universe);
  Element rhs = (*n % 2 == 1 ? da.times_eps() : da) * b;
  rhs += a * db;
  rhs -= (da * db).times_T(1);
  return rhs;
}

LeibnizReport verify_leibniz(const Element& a, const Element& b, const Universe& universe) {
  LeibnizReport report;
  report.difference = boundary(a * b, universe) - leibniz_rhs(a, b, universe);
  if (b == Element::T(1, b.domain())) {
    const Element da = boundary(a, universe);
    Element rhs = -da.times_T(1) + a * boundary_of_T_power(1, a.domain());
    report.times_T_difference = boundary(a.times_T(1), universe) - rhs;
  }
  return report;
}

LeibnizReport verify_leibniz_product(const SncComplex& left, const SncComplex& right,
                                     const Universe& universe) {
  const Element a(left.top_label());
  const Element b(right.top_label());
  return {residue_element(product(left, right)) - leibniz_rhs(a, b, universe), std::nullopt};
}

}  // namespace logburn
