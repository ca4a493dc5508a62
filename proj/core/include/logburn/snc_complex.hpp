#pragma once

// Stratification data of a polar divisor with strict normal crossings.
//
// Vertices are the irreducible polar components D_a in a fixed total order.
// A face is a nonempty sorted set A of vertex positions; its components are
// the irreducible components of D_A, each labelled by the class
// [component, omega_A] of degree dim - |A|, where omega_A is the iterated
// residue taken in increasing vertex order. Empty intersections are absent.

#include "logburn/ring.hpp"
#include "logburn/universe.hpp"

#include <map>
#include <string>
#include <vector>

namespace logburn {

/// Sorted vertex positions.
using Face = std::vector<int>;

struct Component {
  std::string id;
  Generator label;
  /// parents[i] is the index of the component of face A \ {A[i]} containing
  /// this one. Empty for single-vertex faces (whose parent is the whole space).
  std::vector<std::size_t> parents;

  friend bool operator==(const Component&, const Component&) = default;
};

class SncComplex {
 public:
  using FaceMap = std::map<Face, std::vector<Component>>;

  /// Validates on construction (ValidationError naming the offending face).
  SncComplex(int dim, std::vector<std::string> vertices, Generator top_label, FaceMap faces);

  int dim() const noexcept { return dim_; }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const Generator& top_label() const noexcept { return top_; }
  const FaceMap& faces() const noexcept { return faces_; }

  /// Components of `face`, or nullptr when the stratum is empty.
  const std::vector<Component>* components(const Face& face) const;
  /// Index of the component of `sub` containing component `comp` of `face`;
  /// `sub` must be a nonempty subset of `face`.
  std::size_t ancestor(const Face& face, std::size_t comp, const Face& sub) const;

  int vertex_index(std::string_view name) const;
  /// `{a,b}` using vertex names.
  std::string face_name(const Face& face) const;

  friend bool operator==(const SncComplex&, const SncComplex&) = default;

 private:
  void validate();

  int dim_;
  std::vector<std::string> vertices_;
  Generator top_;
  FaceMap faces_;
};

/// Sum over nonempty faces A and their components c of
/// (-1)^(|A|-1) * label(c) * T^(|A|-1).
Element residue_element(const SncComplex& complex);

/// Complex of the product (X x Y, omega ^ eta). Vertices of `left` come
/// first; colliding names of `right` get primes appended. The component
/// (c, d) of face (A, B) is labelled eps^(|A|(dim(right)-|B|)) * label(c) * label(d).
SncComplex product(const SncComplex& left, const SncComplex& right);

/// Blow-up along the component `component` of the stratum `face`. The new
/// exceptional vertex is appended last; residue_element is unchanged.
SncComplex blowup_stratum(const SncComplex& complex, const Face& face, std::size_t component);

/// No vertices, dimension deg(top); the unit for product() when top = 1.
SncComplex point_complex(const Generator& top = Generator::unit());

/// P^n with the toric form dx_1/x_1 ^ ... ^ dx_n/x_n; top label T^n.
SncComplex toric_complex(int n);

enum class ShuffleSign {
  /// eps^(#{(g, a) : g in C, a in A, a < g}) from reordering iterated residues.
  Iterated,
  /// No sign (the naive reading); breaks d o d = 0. Kept for negative controls.
  Ignore,
};

/// Boundary expansions of every atom labelling the top or a face component:
/// d[D_A, omega_A] = sum over C disjoint from A of
/// (-1)^(|C|-1) eps^inv(A,C) [D_{A u C}, omega_{A u C}] T^(|C|-1),
/// restricted to components inside the given one. Labels must be eps^e times
/// a single atom, or carry no atom (those are skipped); anything else throws
/// UnsupportedLabelError.
Universe universe_from_complex(const SncComplex& complex,
                               ShuffleSign sign = ShuffleSign::Iterated);

}  // namespace logburn
