#pragma once

#include "logburn/ring.hpp"
#include "logburn/snc_complex.hpp"
#include "logburn/universe.hpp"

#include <optional>

namespace logburn {

/// d(T^n) = (1 + (-1)^(n-1) eps) T^(n-1), and d(1) = 0.
Element boundary_of_T_power(int n, CoeffDomain domain = CoeffDomain::Integer);

/// The residue homomorphism. Linear; on a generator a_1...a_r eps^e T^k it
/// folds the twisted Leibniz rule
///   d(x*b) = eps^deg(b) d(x)*b + x*d(b) - T d(x) d(b)
/// left to right over the atoms, then applies the T^k rule (k even:
/// d(y T^k) = d(y) T^k; k odd: -d(y) T^k + y d(T^k)). Throws
/// UnknownBoundaryError when an atom's boundary is not known.
Element boundary(const Element& x, const Universe& universe);

struct Dd0Report {
  /// d(d(x)); empty when the identity holds.
  Element residual;
  bool ok() const noexcept { return residual.is_zero(); }
};

Dd0Report verify_dd0(const Element& x, const Universe& universe);

struct LeibnizReport {
  /// d(ab) - (eps^n d(a) b + a d(b) - T d(a) d(b)).
  Element difference;
  /// For b = T: d(aT) - (-d(a) T + a d(T)).
  std::optional<Element> times_T_difference;
  bool ok() const noexcept {
    return difference.is_zero() && (!times_T_difference || times_T_difference->is_zero());
  }
};

/// Right-hand side of the twisted Leibniz rule for homogeneous a, b.
Element leibniz_rhs(const Element& a, const Element& b, const Universe& universe);

/// Compares d(a*b) with the twisted Leibniz expansion. a and b must be
/// homogeneous (ArgumentError otherwise).
LeibnizReport verify_leibniz(const Element& a, const Element& b, const Universe& universe);

/// Same identity with the left side computed geometrically as
/// residue_element(product(left, right)), and the right side from the
/// boundaries of the two top labels in `universe`.
LeibnizReport verify_leibniz_product(const SncComplex& left, const SncComplex& right,
                                     const Universe& universe);

}  // namespace logburn
