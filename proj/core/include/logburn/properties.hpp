#pragma once

// Randomized property checks over generated inputs. Each check is exact and
// reproducible from its seed; `selftest` runs all of them.

#include "logburn/two_local.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace logburn::properties {

/// d(T^n) against (1 + (-1)^(n-1) eps) T^(n-1) and the toric complexes.
CheckResult toric_boundaries(int max_n);

/// residue_element of generated complexes (products of two random
/// complexes, and products with toric complexes) against the boundary of
/// the top label computed by the twisted Leibniz rule.
CheckResult dual_paths(std::uint64_t seed, std::size_t trials);

enum class Mutation { None, VertexBoundary };

/// d d = 0 on the top label and every face label of random complexes. With
/// Mutation::VertexBoundary one vertex atom's expansion gets an extra
/// T^(dim-1) term in each trial, and the check counts the trials in which
/// d d = 0 still held (it should fail).
CheckResult dd_zero(std::uint64_t seed, std::size_t trials, Mutation mutation = Mutation::None);

/// Twisted Leibniz rule on products of complexes and random homogeneous
/// pairs, including b = T.
CheckResult leibniz(std::uint64_t seed, std::size_t trials);

/// residue_element under iterated random blow-ups (depth 1 to 3).
CheckResult blowup_invariance(std::uint64_t seed, std::size_t trials);

/// Sector identities on universes of random complexes.
std::vector<CheckResult> sector_algebra(std::uint64_t seed, std::size_t samples);

/// c(id) = 0, c(inverse) = -c, and additivity along random chains.
CheckResult c_groupoid(std::uint64_t seed, std::size_t trials);

/// kappa is a threshold attained by some component and satisfies every
/// constraint; specialize and the equivariant map agree when all e = 1.
CheckResult specialization(std::uint64_t seed, std::size_t trials);

/// print(parse(print(x))) = print(x) for generated documents of every kind.
CheckResult round_trip(std::uint64_t seed, std::size_t trials);

struct SelftestSizes {
  std::size_t complexes = 200;
  std::size_t sector_samples = 100;
  std::size_t chains = 100;
  std::size_t models = 500;
  std::size_t documents = 50;
};

/// Runs every check and writes one line per check to `out`. The output
/// depends only on the seed and sizes. Returns true when all checks pass.
bool run_selftest(std::uint64_t seed, std::ostream& out, const SelftestSizes& sizes = {});

}  // namespace logburn::properties
