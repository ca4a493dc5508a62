#include "logburn/universe.hpp"

#include "logburn/error.hpp"

namespace logburn {

namespace {
const Element kZero;
}

AtomPtr Universe::declare(Atom atom) { return registry_.declare(std::move(atom)); }
AtomPtr Universe::declare(const AtomPtr& atom) { return registry_.declare(atom); }

void Universe::check_expansion(const Atom& atom, const Element& expansion) const {
  if (expansion.domain() != CoeffDomain::Integer)
    throw DomainError("boundary expansion of '" + atom.id + "' must have integer coefficients");
  if (atom.dim == 0 && !expansion.is_zero())
    throw ArgumentError("dimension-0 atom '" + atom.id + "' must have zero boundary");
  for (const auto& [g, c] : expansion.terms()) {
    if (g.degree() != atom.dim - 1)
      throw ArgumentError("boundary expansion of '" + atom.id + "' has a term of degree " +
                          std::to_string(g.degree()) + ", expected " +
                          std::to_string(atom.dim - 1));
    for (const auto& a : g.atoms())
      if (!registry_.find(a->id))
        throw RegistryError("boundary expansion of '" + atom.id + "' uses unregistered atom '" +
                            a->id + "'");
  }
  if (atom.eps_self_dual && expansion.times_eps() != expansion)
    throw ArgumentError("eps-self-dual atom '" + atom.id + "' needs an eps-invariant boundary");
}

void Universe::set_boundary(std::string_view id, const Element& expansion) {
  auto atom = registry_.at(id);
  check_expansion(*atom, expansion);
  auto [it, inserted] = boundary_.try_emplace(std::string(id), expansion);
  if (!inserted && it->second != expansion)
    throw RegistryError("conflicting boundary expansions for atom '" + std::string(id) + "': " +
                        it->second.str() + " vs " + expansion.str());
}

void Universe::set_closed(std::string_view id) { set_boundary(id, Element()); }

void Universe::override_boundary(std::string_view id, const Element& expansion) {
  auto atom = registry_.at(id);
  check_expansion(*atom, expansion);
  boundary_.insert_or_assign(std::string(id), expansion);
}

Universe::State Universe::state(std::string_view id) const {
  auto atom = registry_.at(id);
  if (atom->dim == 0) return State::Closed;
  auto it = boundary_.find(id);
  if (it == boundary_.end()) return State::Unknown;
  return it->second.is_zero() ? State::Closed : State::Known;
}

const Element& Universe::boundary_of(const Atom& atom) const {
  if (atom.dim == 0) return kZero;
  auto it = boundary_.find(atom.id);
  if (it == boundary_.end()) throw UnknownBoundaryError(atom.id);
  return it->second;
}

void Universe::merge(const Universe& other) {
  registry_.merge(other.registry_);
  for (const auto& [id, e] : other.boundary_) set_boundary(id, e);
}

}  // namespace logburn
