#pragma once

// The ring after inverting 2. It splits along the idempotents (1 +- eps)/2
// into a sector where eps = 1 and a sector where eps = -1 (and hence T = 0).
// On the eps = 1 sector, F(a) = a - T d(a) is an involutive ring
// endomorphism whose eigenspaces B+ (F = id) and B- (F = -id) decompose it.

#include "logburn/ring.hpp"
#include "logburn/universe.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace logburn {

/// Image of an element in one sector. Generators are stored with eps
/// exponent 0; in sector -1 no generator absorbs eps (those vanish there).
class SectorElement {
 public:
  explicit SectorElement(int sector = 1);

  /// Projects `x` (any domain; the result is dyadic) into `sector`.
  static SectorElement project(const Element& x, int sector);

  int sector() const noexcept { return sector_; }
  const Element& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_.is_zero(); }

  /// The same generators viewed in the full ring (eps exponent 0).
  Element lift() const { return value_; }

  SectorElement operator+(const SectorElement& o) const;
  SectorElement operator-(const SectorElement& o) const;
  SectorElement operator-() const;
  SectorElement operator*(const SectorElement& o) const;
  SectorElement times_T(int power = 1) const;
  SectorElement half() const;
  SectorElement homogeneous_part(int n) const;
  friend bool operator==(const SectorElement&, const SectorElement&) = default;

  std::string str() const { return value_.str(); }

 private:
  SectorElement(int sector, Element value) : sector_(sector), value_(std::move(value)) {}
  void require_same_sector(const SectorElement& o) const;

  int sector_;
  Element value_;
};

struct SectorSplit {
  SectorElement plus{1};
  SectorElement minus{-1};
};

SectorSplit sector_split(const Element& x);
/// lift(plus) (1 + eps)/2 + lift(minus) (1 - eps)/2.
Element reconstruct(const SectorSplit& split);

/// Residue map inside a sector.
SectorElement sector_boundary(const SectorElement& x, const Universe& universe);

/// F(x) = x - T d(x); requires sector +1.
SectorElement involution_F(const SectorElement& x, const Universe& universe);

struct PlusMinusSplit {
  SectorElement bplus{1};
  SectorElement bminus{1};
};

/// ((x + F x)/2, (x - F x)/2).
PlusMinusSplit plus_minus_split(const SectorElement& x, const Universe& universe);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t trials = 0;
  /// First failing sample, rendered.
  std::string detail;
};

struct SectorAlgebraReport {
  std::vector<CheckResult> checks;
  bool ok() const noexcept;
};

/// Exact randomized verification of the sector identities: F multiplicative,
/// F^2 = id, d F = -d and F d = d, d vanishing on B+, (1/2) d and T mutually
/// inverse between B+ and B-, the graded Leibniz rule for
/// d'(a) = (-1)^(1+deg a) d(a) in sector -1, and d d = 0 in both sectors.
/// Samples are built from the universe's atoms and T; every atom is also
/// tested on its own.
SectorAlgebraReport check_sector_algebra(const Universe& universe, std::size_t samples,
                                         std::uint64_t seed);

}  // namespace logburn
