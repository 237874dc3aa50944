#pragma once
// Bipartite matching feasibility used by every bottleneck computation.
// The matching definition only constrains the "required" (non-trivial)
// vertices, and a matching saturating required lefts and one saturating
// required rights can always be merged, so feasibility splits into two
// one-sided saturation checks.

#include <cstddef>
#include <functional>
#include <vector>

#include "tda/rational.hpp"

namespace tda {

// True iff some matching in the bipartite graph saturates every vertex
// listed in required (indices into the left side).  adj[i] lists the right
// neighbours of left vertex i.
bool can_saturate(const std::vector<std::vector<std::size_t>>& adj,
                  std::size_t n_right,
                  const std::vector<std::size_t>& required);

// True iff a perfect matching exists between two sides of equal size.
bool has_perfect_matching(const std::vector<std::vector<std::size_t>>& adj,
                          std::size_t n_right);

// Infimum search for bottleneck-style distances: feasible() must be monotone
// nondecreasing in epsilon and constant on open intervals between candidate
// values.  Probes each candidate and a point just above it, so an unattained
// infimum is still reported exactly.  Returns +inf when nothing is feasible.
Ext infimum_over_candidates(std::vector<Rational> cands,
                            const std::function<bool(const Ext&)>& feasible);

}  // namespace tda
