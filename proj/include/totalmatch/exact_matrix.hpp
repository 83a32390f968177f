#pragma once

#include "totalmatch/bigint.hpp"
#include "totalmatch/graph.hpp"

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace totalmatch {

/// Dense row-major matrix of unbounded integers, optionally carrying an
/// Element label per row and per column.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols);
    ExactMatrix(int rows, int cols, std::vector<BigInt> entries);
    ExactMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static ExactMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const BigInt& operator()(int r, int c) const { return entries_[index(r, c)]; }
    BigInt& operator()(int r, int c) { return entries_[index(r, c)]; }
    const std::vector<BigInt>& entries() const { return entries_; }

    const std::vector<Element>& row_labels() const { return row_labels_; }
    const std::vector<Element>& col_labels() const { return col_labels_; }
    /// Labels must be empty or match the dimension; throws InputError otherwise.
    void set_labels(std::vector<Element> row_labels, std::vector<Element> col_labels);

    ExactMatrix transpose() const;

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> entries_;
    std::vector<Element> row_labels_;
    std::vector<Element> col_labels_;
};

/// Row and column index sets into a host matrix. Order is preserved on
/// extraction.
struct SubmatrixSelector {
    std::vector<int> rows;
    std::vector<int> cols;
};

/// B(G): vertices x edges, entry 1 iff the vertex is an endpoint.
ExactMatrix incidence_matrix(const Graph& g);

/// M(G) = [I B; B^T I], rows and columns labelled vertices 1..n then edges in
/// input order. Entry (a, b) is 1 iff elements a and b are incident.
ExactMatrix constraint_matrix(const Graph& g);

/// N_k = [1 1^T; 1 I], of size (1+k) x (1+k). det N_k = 1 - k.
ExactMatrix near_pencil(int k);

/// Exact determinant by fraction-free (Bareiss) elimination. Runs on 64-bit
/// words with 128-bit products while everything fits and restarts on BigInt
/// when an intermediate would overflow. The 0x0 determinant is 1.
BigInt determinant(const ExactMatrix& m);

ExactMatrix extract(const ExactMatrix& m, const SubmatrixSelector& s);

/// Fixed-width Bareiss on a row-major n x n buffer (clobbered). Returns
/// nullopt if any intermediate leaves int64 range.
std::optional<std::int64_t> bareiss_int64(std::span<std::int64_t> a, int n);

/// Text dump: first line `<rows> <cols>`, then one line of space-separated
/// integers per row.
void write_matrix(std::ostream& out, const ExactMatrix& m);
ExactMatrix parse_matrix(std::istream& in);

}  // namespace totalmatch
