#pragma once

// The invariant c of birational maps preserving logarithmic volume forms.
//
// Everything works on presentations: a proper birational morphism is given
// by its exceptional divisors and their residue classes, a birational map by
// a roof X <- W -> Y, and a composition by glue data for a common
// resolution. Strict transforms keep the atom of the divisor they come from.

#include "logburn/ring.hpp"

#include <vector>

namespace logburn {

struct ExceptionalDivisor {
  /// Class of the divisor itself (dimension n - 1).
  AtomPtr divisor;
  /// [E, residue of the pulled-back form along E], degree n - 1.
  Generator residue;

  friend bool operator==(const ExceptionalDivisor& a, const ExceptionalDivisor& b) {
    return a.divisor->id == b.divisor->id && a.residue == b.residue;
  }
};

/// Proper birational morphism source -> target.
struct MorphismData {
  Generator source;
  Generator target;
  std::vector<ExceptionalDivisor> exceptional;

  /// ValidationError unless source and target have equal degree n and every
  /// divisor and residue has degree n - 1.
  void validate() const;
  int dim() const noexcept { return target.degree(); }
  friend bool operator==(const MorphismData&, const MorphismData&) = default;
};

/// X <-p- W -q-> Y with p^* omega_X = q^* omega_Y.
struct RoofPresentation {
  Generator x;
  Generator y;
  MorphismData p;
  MorphismData q;

  void validate() const;
  friend bool operator==(const RoofPresentation&, const RoofPresentation&) = default;
};

/// Glue for composing two roofs: U -u-> V and U -v-> W with q o u = r o v.
struct Glue {
  MorphismData u;
  MorphismData v;
  friend bool operator==(const Glue&, const Glue&) = default;
};

/// Sum of the residue classes of the exceptional divisors.
Element c_morphism(const MorphismData& f);

/// Data of `second` o `first` (first: Z -> Y, second: Y -> X): the
/// exceptional divisors of `first` followed by those of `second`, whose
/// strict transforms keep their labels.
MorphismData compose_morphisms(const MorphismData& first, const MorphismData& second);

/// c(q) - c(p).
Element c_invariant(const RoofPresentation& roof);

RoofPresentation identity_roof(const Generator& x);
RoofPresentation inverse(const RoofPresentation& roof);

/// Roof (p o u, s o v) of psi o phi. Checks that phi ends where psi starts,
/// that u, v land on the two roofs and start on the same U, and that q o u
/// and r o v have the same exceptional divisors (as multisets).
RoofPresentation compose(const RoofPresentation& phi, const RoofPresentation& psi, const Glue& glue);

/// roofs[0], ..., roofs[k]; glues[i] composes the composite of the first
/// i + 1 roofs with roofs[i + 1].
struct RoofChain {
  std::vector<RoofPresentation> roofs;
  std::vector<Glue> glues;
  friend bool operator==(const RoofChain&, const RoofChain&) = default;
};

/// Composite of a chain, folding compose() from the left.
RoofPresentation composite(const RoofChain& chain);

/// Two roofs presenting the same map, linked by a common resolution
/// (p o u = r o v and q o u = s o v): returns c(first) - c(second), which
/// must vanish.
Element independence_defect(const RoofPresentation& first, const RoofPresentation& second,
                            const Glue& glue);

}  // namespace logburn
