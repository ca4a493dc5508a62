#pragma once

// Seeded generators for randomized checks. Everything here is
// deterministic across platforms for a fixed seed: only the raw
// mt19937_64 stream is used, never the standard distributions.

#include "logburn/birational.hpp"
#include "logburn/ring.hpp"
#include "logburn/snc_complex.hpp"
#include "logburn/specialization.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace logburn::random {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  /// True with probability num/den.
  bool chance(int num, int den) { return below(static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num); }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

struct ComplexOptions {
  int min_dim = 1;
  int max_dim = 5;
  int max_vertices = 6;
  /// Prefix for every generated atom id; keeps atoms of different complexes apart.
  std::string prefix = "x";
  /// Allow strata with two components.
  bool multiple_components = true;
};

/// Random valid complex whose labels are eps^e times fresh atoms (or 1/eps
/// for some point strata) and whose top label is the atom `<prefix>X`.
SncComplex random_complex(Rng& rng, const ComplexOptions& options);

struct ElementOptions {
  int max_terms = 4;
  int max_atoms = 3;
  int max_tpow = 2;
  CoeffDomain domain = CoeffDomain::Integer;
};

/// Random combination of products of `atoms`, eps and T.
Element random_element(Rng& rng, const std::vector<AtomPtr>& atoms, const ElementOptions& options);

/// Random nonzero homogeneous element (falls back to a single term).
Element random_homogeneous(Rng& rng, const std::vector<AtomPtr>& atoms,
                           const ElementOptions& options);

/// Sequence of `depth` random stratum blow-ups.
SncComplex random_blowups(Rng& rng, SncComplex complex, int depth);

/// Chain of `length` roofs between fresh classes of dimension `dim`, with
/// glue data built from a random common resolution for each composition.
/// Atom ids start with `prefix`.
RoofChain random_chain(Rng& rng, int length, int dim, const std::string& prefix = "r");

/// Roof of a random birational map x -> y through fresh classes.
RoofPresentation random_roof(Rng& rng, const Generator& x, const Generator& y,
                             const std::string& prefix);

/// Glue for compose(phi, psi): a fresh U with extra exceptional divisors
/// common to both legs.
Glue random_glue(Rng& rng, const RoofPresentation& phi, const RoofPresentation& psi,
                 const std::string& prefix);

struct ModelOptions {
  int max_n = 3;
  int max_vertical = 3;
  int max_horizontal = 2;
  int max_e = 6;
  int max_abs_d = 4;
  std::string prefix = "m";
};

/// Valid model whose strata are labelled by fresh atoms (eps-twisted at random).
DvrModel random_model(Rng& rng, const ModelOptions& options);

}  // namespace logburn::random
