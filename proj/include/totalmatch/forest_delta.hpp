#pragma once

#include "totalmatch/bigint.hpp"
#include "totalmatch/exact_matrix.hpp"
#include "totalmatch/graph.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace totalmatch {

/// G′ = (V(G), edges) and G″ = G′[vertices].
struct ForestPair {
    std::vector<EdgeId> edges;
    std::vector<VertexId> vertices;

    friend bool operator==(const ForestPair&, const ForestPair&) = default;
};

/// `edges: 1 3 / vertices: 2`
std::string to_string(const ForestPair& p);

/// A(G″) + diag(d_{G′}(v) − 1), rows and columns in the order of
/// pair.vertices (sorted). Throws PreconditionError if f is not a forest and
/// InputError for invalid or repeated ids.
ExactMatrix l_tilde(const Graph& f, const ForestPair& pair);

struct ForestDeltaResult {
    BigInt value = 1;
    ForestPair pair;
    bool restricted = false;  ///< whether the restricted pair family was enumerated
};

struct ForestDeltaOptions {
    std::size_t vertex_cap = 14;
};

/// max |det L̃(G′, G″)| over edge subsets (ascending mask) and vertex subsets
/// (ascending mask); the first maximizer is reported. When every component has
/// at least three vertices only pairs with d_{G′}(v) >= 2 on G″ and every G′
/// edge touching G″ are visited.
ForestDeltaResult delta_forest_formula(const Graph& f, const ForestDeltaOptions& opts = {});

struct DegreeBounds {
    int n2 = 0;                    ///< vertices of degree >= 2
    BigInt lower_exact_square = 1;  ///< ∏ (d_i − 1) over those vertices
    double lower = 1;              ///< its square root
    /// upper = (Σ d_i / n2)^n2 = upper_num / upper_den, exactly.
    BigInt upper_num = 1;
    BigInt upper_den = 1;
    double upper = 1;
    bool degenerate = false;  ///< n2 = 0: every component is a path

    /// value <= upper, decided in integers.
    bool upper_holds(const BigInt& value) const { return value * upper_den <= upper_num; }
    /// value >= lower, decided in integers.
    bool lower_holds(const BigInt& value) const { return value >= 0 && value * value >= lower_exact_square; }
};

/// Throws PreconditionError if f is not a forest.
DegreeBounds degree_sequence_bounds(const Graph& f);

struct BipartitionWitness {
    std::vector<VertexId> side;  ///< the side with the larger determinant
    BigInt value = 1;            ///< det L̃(G, G[side])
    std::vector<VertexId> other_side;
    BigInt other_value = 1;
};

/// 2-colours the subgraph induced by the vertices of degree >= 2 (BFS from the
/// smallest id of each component, that vertex on side 0). Throws
/// PreconditionError if f is not a forest.
BipartitionWitness bipartition_lower_witness(const Graph& f);

}  // namespace totalmatch
