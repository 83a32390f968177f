#pragma once

#include "totalmatch/graph.hpp"
#include "totalmatch/structure.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace totalmatch {

/// Stable set plus matching with no chosen vertex on a chosen edge.
struct TotalMatching {
    std::vector<VertexId> vertices;  // sorted
    std::vector<EdgeId> edges;       // sorted
    Weight weight = 0;

    friend bool operator==(const TotalMatching&, const TotalMatching&) = default;
};

/// `weight: W` / `vertices: 1 4` / `edges: (2,3)`, one per line.
std::string to_string(const Graph& g, const TotalMatching& t);

/// Throws InputError on invalid ids. Does not look at `weight`.
bool is_total_matching(const Graph& g, const TotalMatching& t);

/// Sum of the member weights in g.
Weight total_weight(const Graph& g, const TotalMatching& t);

/// v_1 e_1 v_2 ... v_k. Host ids are carried through to the solution.
struct PathInstance {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;  // size k-1, edges[i] joins vertices[i], vertices[i+1]
    std::vector<Weight> vertex_weights;
    std::vector<Weight> edge_weights;
    std::vector<bool> vertex_selectable;
};

/// Instance for a vertex sequence that is a path of g, all vertices selectable.
PathInstance path_instance(const Graph& g, const std::vector<VertexId>& seq);

struct MatchingOptions {
    std::size_t brute_cap = 20;  ///< largest n+m for solve_brute
    std::size_t fpt_cap = 40;    ///< largest |I(Z)| for solve_fpt
};

/// Exhaustive search; among optima the smallest element bitmask (vertices then
/// edges, bit i = element i) wins. Throws ResourceError above brute_cap.
TotalMatching solve_brute(const Graph& g, const MatchingOptions& opts = {});

/// Independent optimum on each path, summed.
TotalMatching solve_paths_dp(const std::vector<PathInstance>& paths);

/// Raised by solve_fpt when no decomposition exists for the bound.
class BoundExceeded : public std::runtime_error {
public:
    explicit BoundExceeded(DeltaOutcome o);
    const DeltaOutcome& outcome() const noexcept { return outcome_; }

private:
    DeltaOutcome outcome_;
};

/// Enumerates total matchings M1 inside I(Z) and completes each by the path DP
/// on G − Z − Z'. Throws BoundExceeded when the decomposition fails and
/// ResourceError when |I(Z)| exceeds fpt_cap.
TotalMatching solve_fpt(const Graph& g, long long bound, const MatchingOptions& opts = {});

}  // namespace totalmatch
