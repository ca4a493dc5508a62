#pragma once

#include "logburn/ring.hpp"

#include <map>
#include <string>
#include <string_view>
#include <variant>

namespace logburn {

/// A registry of atoms together with what is known about their residues.
///
/// An atom's boundary is either an explicit expansion (an element of degree
/// dim - 1), "closed" (boundary zero) or unknown. Dimension-0 atoms are
/// always closed.
class Universe {
 public:
  enum class State { Known, Closed, Unknown };

  const AtomRegistry& registry() const noexcept { return registry_; }

  /// Declares `atom` with unknown boundary (existing boundary data is kept).
  AtomPtr declare(Atom atom);
  AtomPtr declare(const AtomPtr& atom);

  /// Records the expansion of the atom `id`. Checks the degree, that every
  /// atom of the expansion is registered, and eps-invariance for
  /// eps-self-dual atoms. Re-recording a different expansion throws RegistryError.
  void set_boundary(std::string_view id, const Element& expansion);
  void set_closed(std::string_view id);
  /// Replaces whatever is recorded (used by mutation tests and the CLI).
  void override_boundary(std::string_view id, const Element& expansion);

  State state(std::string_view id) const;
  /// Expansion of the atom, zero for closed atoms; UnknownBoundaryError otherwise.
  const Element& boundary_of(const Atom& atom) const;
  const std::map<std::string, Element, std::less<>>& expansions() const noexcept {
    return boundary_;
  }

  /// Union of atoms and boundary tables; conflicting data throws RegistryError.
  void merge(const Universe& other);

 private:
  void check_expansion(const Atom& atom, const Element& expansion) const;

  AtomRegistry registry_;
  std::map<std::string, Element, std::less<>> boundary_;
};

}  // namespace logburn
