#pragma once

// Specialization of classes over a discretely valued field, computed from
// combinatorial data of an SNC model: multiplicities e and divisor
// coefficients d of the extended form along the special fiber components,
// coefficients of the horizontal polar components, and user-supplied labels
// for the strata.

#include "logburn/ring.hpp"

#include <boost/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace logburn {

using Rational = boost::rational<long long>;

struct VerticalComponent {
  std::string id;
  int e = 1;
  int d = 0;
  friend bool operator==(const VerticalComponent&, const VerticalComponent&) = default;
};

struct HorizontalComponent {
  std::string id;
  int d = -1;
  friend bool operator==(const HorizontalComponent&, const HorizontalComponent&) = default;
};

/// Sorted component ids.
using StratumKey = std::vector<std::string>;

struct DvrModel {
  /// Relative dimension (dimension of the generic fiber).
  int n = 0;
  std::vector<VerticalComponent> vertical;
  std::vector<HorizontalComponent> horizontal;
  /// Labels of the nonempty strata meeting the special fiber, keyed by the
  /// sorted ids of the components cut out; degree n + 1 - |key|.
  std::map<StratumKey, Generator> strata;

  /// ValidationError on: repeated or unknown ids, e < 1, horizontal d < -1,
  /// strata without a vertical component, wrong label degree, or a labelled
  /// stratum some of whose faces meeting the special fiber are unlabelled.
  void validate() const;
  friend bool operator==(const DvrModel&, const DvrModel&) = default;
};

/// Least kappa with kappa * e + d >= -1 for every vertical component.
/// ArgumentError when there are no vertical components.
Rational kappa(const DvrModel& model);

struct LogSubcomplex {
  /// Vertical components with kappa * e + d = -1.
  std::vector<std::string> a;
  /// Horizontal components with d = -1.
  std::vector<std::string> b;
  friend bool operator==(const LogSubcomplex&, const LogSubcomplex&) = default;
};

LogSubcomplex log_subcomplex(const DvrModel& model);

/// Sum over labelled strata F = A u B (A in a, nonempty; B in b) of
/// (-1)^(|F|-1) label(F) T^(|F|-1). IntegralityError unless kappa is an integer.
Element specialize(const DvrModel& model);

/// Sum over nonempty A in a of (-1)^(|A|-1) label(A) T^(|A|-1) with the
/// stratum atom decorated by mu_(e_A), e_A = gcd of the multiplicities.
/// Decorated atoms are named `base#mu=k` (and `unit#mu=k` for labels
/// without atoms); they are added to `decorated` when given.
Element specialize_equivariant(const DvrModel& model, AtomRegistry* decorated = nullptr);

/// `label` with its atom replaced by the mu_k-decorated one (k = 1: unchanged).
Generator decorate(const Generator& label, int k, AtomRegistry* decorated = nullptr);

/// Replaces every decorated atom by its base atom from `base` (dropping
/// `unit` atoms).
Element forget_decorations(const Element& x, const AtomRegistry& base);

}  // namespace logburn
