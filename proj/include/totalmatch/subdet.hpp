#pragma once

#include "totalmatch/bigint.hpp"
#include "totalmatch/exact_matrix.hpp"
#include "totalmatch/graph.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace totalmatch {

/// Row choice (red) and column choice (cyan) of a square submatrix of M(G).
/// Both lists are kept sorted in element order.
struct ElementColoring {
    std::vector<Element> red;
    std::vector<Element> cyan;

    std::vector<Element> bichromatic() const;
    std::vector<Element> monochromatic() const;

    friend bool operator==(const ElementColoring&, const ElementColoring&) = default;
};

/// `red: v1 v3 e2 / cyan: v1 e1 e2`
std::string to_string(const ElementColoring& c);
ElementColoring parse_coloring(std::string_view text);

enum class SubdetMode { Full, Principal, Forced };
std::string to_string(SubdetMode m);

struct SubdetResult {
    BigInt value = 0;  ///< max |det| found
    ElementColoring witness;
    SubdetMode mode = SubdetMode::Full;
    /// Early exit fired: value exceeds the requested threshold but need not be
    /// the maximum.
    bool partial = false;
};

struct SubdetOptions {
    /// Largest n+m accepted by the full search without an early-exit threshold.
    std::size_t full_cap = 14;
    /// Largest n+m accepted by the full search when early_exit is set.
    std::size_t hard_cap = 22;
    /// Largest n+m accepted by the principal search (2^(n+m) subsets).
    std::size_t principal_cap = 22;
    /// Stop as soon as some |det| > *early_exit.
    std::optional<BigInt> early_exit;
    /// Restrict the full search to candidates shaped like minimal witnesses:
    /// no faults, and every row and column with at least two ones. Leaves the
    /// maximum unchanged but is only for searching; oracle runs keep it off.
    bool minimal_witness_pruning = false;
};

/// Maximum |det| over all square submatrices of M(g), by exhaustive search.
/// Ties resolve to the smallest (size, row mask, column mask), where bit i of a
/// mask is element i in vertices-then-edges order. Prunes only candidates whose
/// determinant is provably zero or provably no larger than the incumbent.
SubdetResult max_subdet_brute(const Graph& g, const SubdetOptions& opts = {});

/// Maximum |det| over principal submatrices M[S,S]. For forests this is Δ(G).
/// Throws PreconditionError when g has a cycle.
SubdetResult max_subdet_principal(const Graph& g, const SubdetOptions& opts = {});

/// Maximum |det| over square submatrices whose row and column sets both contain
/// every forced element. Forests use principal enumeration, anything else the
/// full search.
SubdetResult max_subdet_forced(const Graph& g, const std::vector<Element>& forced, const SubdetOptions& opts = {});

/// The full search restricted to row and column sets containing `forced`,
/// regardless of whether g is a forest.
SubdetResult max_subdet_forced_full(const Graph& g, const std::vector<Element>& forced,
                                    const SubdetOptions& opts = {});

using ComponentSolver = std::function<SubdetResult(const Graph&)>;

/// Product of per-component maxima. The returned witness is the union of the
/// component witnesses mapped back to g; M(g) restricted to it is block
/// diagonal, so its determinant is the product.
SubdetResult delta_by_components(const Graph& g, const ComponentSolver& solver);

/// Picks principal enumeration for forests and the full search otherwise.
SubdetResult max_subdet_auto(const Graph& g, const SubdetOptions& opts = {});

/// |det| of M(g) restricted to the witness rows/columns, recomputed from scratch
/// with ExactMatrix. Throws InputError if the coloring is not square or names
/// an invalid element.
BigInt witness_value(const Graph& g, const ElementColoring& c);

}  // namespace totalmatch
