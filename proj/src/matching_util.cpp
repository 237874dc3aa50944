#include "tda/matching_util.hpp"

#include <algorithm>
#include <cstdint>

namespace tda {

namespace {

bool augment(std::size_t u,
             const std::vector<std::vector<std::size_t>>& adj,
             std::vector<std::size_t>& match_r,
             std::vector<bool>& visited) {
    for (std::size_t v : adj[u]) {
        if (visited[v]) continue;
        visited[v] = true;
        if (match_r[v] == SIZE_MAX || augment(match_r[v], adj, match_r, visited)) {
            match_r[v] = u;
            return true;
        }
    }
    return false;
}

}  // namespace

bool can_saturate(const std::vector<std::vector<std::size_t>>& adj,
                  std::size_t n_right,
                  const std::vector<std::size_t>& required) {
    std::vector<std::size_t> match_r(n_right, SIZE_MAX);
    for (std::size_t u : required) {
        std::vector<bool> visited(n_right, false);
        if (!augment(u, adj, match_r, visited)) return false;
    }
    return true;
}

bool has_perfect_matching(const std::vector<std::vector<std::size_t>>& adj,
                          std::size_t n_right) {
    if (adj.size() != n_right) return false;
    std::vector<std::size_t> all(adj.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return can_saturate(adj, n_right, all);
}

Ext infimum_over_candidates(std::vector<Rational> cands,
                            const std::function<bool(const Ext&)>& feasible) {
    cands.push_back(Rational(0));
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (feasible(Ext(cands[i]))) return Ext(cands[i]);
        Rational probe = (i + 1 < cands.size())
                             ? (cands[i] + cands[i + 1]) / Rational(2)
                             : cands[i] + Rational(1);
        if (feasible(Ext(probe))) return Ext(cands[i]);
    }
    return Ext::pos_inf();
}

}  // namespace tda
