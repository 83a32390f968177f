#pragma once

#include "totalmatch/bigint.hpp"
#include "totalmatch/graph.hpp"
#include "totalmatch/subdet.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace totalmatch {

/// Z = X ∪ Y with G − Z a disjoint union of paths.
struct Decomposition {
    std::vector<VertexId> x;  ///< vertices of degree >= 3
    std::vector<VertexId> y;  ///< smallest id of each cycle of G − X
    std::vector<VertexId> z;  ///< sorted union
    std::size_t cut_size = 0;  ///< |δ(Z)|
    Subgraph residual;         ///< G − Z, with maps back to g
    /// Path components of G − Z as host vertex sequences, in the order of
    /// classify_paths_and_cycles on the residual.
    std::vector<std::vector<VertexId>> paths;
    /// For each entry of `paths`, the host edges joining it to Z.
    std::vector<std::vector<EdgeId>> attachments;
};

enum class CertificateKind {
    None,
    DegreeExceeds,              ///< a vertex of degree > bound + 1
    TooManyHighDegreeVertices,  ///< near-pencil product over a vertex set exceeds bound
    TooManyDisjointCycles,      ///< 2^(#disjoint cycles) exceeds bound
    SubdeterminantFound,        ///< a square submatrix of the shrunken core
};

std::string to_string(CertificateKind k);

struct Certificate {
    CertificateKind kind = CertificateKind::None;
    /// The lower bound on Δ(G) this certificate proves.
    BigInt value = 0;
    VertexId vertex = 0;  // DegreeExceeds
    int degree = 0;
    std::vector<VertexId> pencil_set;             // TooManyHighDegreeVertices
    std::vector<std::vector<VertexId>> cycles;    // TooManyDisjointCycles
    Graph core;                                   // SubdeterminantFound
    ElementColoring witness;                      // on `core`
};

struct DeltaOutcome {
    enum class Kind { Exact, Exceeds };
    Kind kind = Kind::Exact;
    /// Exact: Δ(G). Exceeds: the value the certificate proves, which is > bound
    /// but need not be Δ(G).
    BigInt value = 1;
    Certificate certificate;
    /// Exact only: a maximizing coloring on `core`.
    Graph core;
    ElementColoring witness;

    bool exceeds() const { return kind == Kind::Exceeds; }
};

/// Δ(G) >= ∏_{v∈D} (d_H(v) − 1), H keeping only edges between D and V∖D.
/// Throws PreconditionError if some v ∈ D has fewer than 2 neighbours outside
/// D, InputError on invalid or repeated ids.
BigInt near_pencil_lower_bound(const Graph& g, const std::vector<VertexId>& d);

/// Heuristic near-pencil bound: the best of one maximum-degree vertex and
/// greedy stable sets of degree->=3 vertices (each such vertex first, then by
/// degree descending and id).
/// Returns (bound, D); an empty D means the trivial bound 1.
std::pair<BigInt, std::vector<VertexId>> greedy_near_pencil_bound(const Graph& g);

/// Either Z as described on Decomposition, or an exceeds outcome carrying the
/// first certificate that fired (degree, then high-degree sets, then cycles).
std::variant<Decomposition, DeltaOutcome> compute_decomposition(const Graph& g, long long bound);

/// Contracts the first eligible run of 7 consecutive degree-2 vertices into
/// one vertex joined to the run's two outer neighbours. A run is skipped when
/// those neighbours coincide, since the result would not be simple. Returns
/// nullopt when no run qualifies.
std::optional<Graph> contract_degree2_run(const Graph& g);

/// Drops components that are paths, then contracts 7-runs until none is left.
/// Throws PreconditionError if compute_decomposition(g, bound) fails.
Graph shrink_to_core(const Graph& g, long long bound);

struct RecognizeOptions {
    /// Caps for the per-component searches on the core; early_exit is set
    /// internally.
    SubdetOptions subdet;
};

/// Exact Δ(G) when it is at most bound, otherwise a certified exceeds outcome.
/// Throws ResourceError when a core component is above the enumeration caps.
DeltaOutcome recognize(const Graph& g, long long bound, const RecognizeOptions& opts = {});

/// Recomputes a certificate from g alone and checks that it proves Δ(G) > bound.
bool verify_certificate(const Graph& g, const Certificate& c, long long bound);

}  // namespace totalmatch
