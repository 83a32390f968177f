#include "totalmatch/exact_matrix.hpp"

#include "totalmatch/errors.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <string>

namespace totalmatch {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
    entries_.assign(static_cast<std::size_t>(rows) * cols, BigInt(0));
}

ExactMatrix::ExactMatrix(int rows, int cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
    if (entries_.size() != static_cast<std::size_t>(rows) * cols)
        throw InputError("entry count does not match " + std::to_string(rows) + "x" + std::to_string(cols));
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) throw InputError("ragged matrix literal");
        for (long long x : row) entries_.emplace_back(x);
    }
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void ExactMatrix::set_labels(std::vector<Element> row_labels, std::vector<Element> col_labels) {
    if (!row_labels.empty() && static_cast<int>(row_labels.size()) != rows_)
        throw InputError("row label count mismatch");
    if (!col_labels.empty() && static_cast<int>(col_labels.size()) != cols_)
        throw InputError("column label count mismatch");
    row_labels_ = std::move(row_labels);
    col_labels_ = std::move(col_labels);
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    t.set_labels(col_labels_, row_labels_);
    return t;
}

ExactMatrix incidence_matrix(const Graph& g) {
    ExactMatrix b(g.vertex_count(), g.edge_count());
    std::vector<Element> rl, cl;
    for (VertexId v = 1; v <= g.vertex_count(); ++v) rl.push_back(Element::vertex(v));
    for (EdgeId e = 1; e <= g.edge_count(); ++e) {
        cl.push_back(Element::edge(e));
        b(g.edge(e).u - 1, e - 1) = 1;
        b(g.edge(e).v - 1, e - 1) = 1;
    }
    b.set_labels(std::move(rl), std::move(cl));
    return b;
}

ExactMatrix constraint_matrix(const Graph& g) {
    const int n = g.vertex_count();
    const int size = g.element_count();
    ExactMatrix m = ExactMatrix::identity(size);
    for (EdgeId e = 1; e <= g.edge_count(); ++e) {
        const int col = n + e - 1;
        for (VertexId v : {g.edge(e).u, g.edge(e).v}) {
            m(v - 1, col) = 1;
            m(col, v - 1) = 1;
        }
    }
    std::vector<Element> labels;
    for (int i = 0; i < size; ++i) labels.push_back(g.element_at(i));
    m.set_labels(labels, labels);
    return m;
}

ExactMatrix near_pencil(int k) {
    if (k < 1) throw InputError("near_pencil: k must be >= 1");
    ExactMatrix m = ExactMatrix::identity(k + 1);
    for (int i = 1; i <= k; ++i) {
        m(0, i) = 1;
        m(i, 0) = 1;
    }
    return m;
}

std::optional<std::int64_t> bareiss_int64(std::span<std::int64_t> a, int n) {
    if (n == 0) return 1;
    auto at = [&](int r, int c) -> std::int64_t& { return a[static_cast<std::size_t>(r) * n + c]; };
    constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
    std::int64_t prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int p = k + 1;
            while (p < n && at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (int c = k; c < n; ++c) std::swap(at(k, c), at(p, c));
            sign = -sign;
        }
        const std::int64_t pivot = at(k, k);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                // Both products fit in 127 bits; their difference can exceed
                // that only if each is near the limit, which the range check
                // below would reject anyway.
                const __int128 x = static_cast<__int128>(at(i, j)) * pivot;
                const __int128 y = static_cast<__int128>(at(i, k)) * at(k, j);
                __int128 num;
                if (__builtin_sub_overflow(x, y, &num)) return std::nullopt;
                const __int128 q = num / prev;
                if (q < lo || q > hi) return std::nullopt;
                at(i, j) = static_cast<std::int64_t>(q);
            }
            at(i, k) = 0;
        }
        prev = pivot;
    }
    const __int128 det = static_cast<__int128>(sign) * at(n - 1, n - 1);
    if (det < lo || det > hi) return std::nullopt;
    return static_cast<std::int64_t>(det);
}

namespace {

BigInt bareiss_big(std::vector<BigInt> a, int n) {
    if (n == 0) return 1;
    auto at = [&](int r, int c) -> BigInt& { return a[static_cast<std::size_t>(r) * n + c]; };
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int p = k + 1;
            while (p < n && at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (int c = k; c < n; ++c) std::swap(at(k, c), at(p, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

}  // namespace

BigInt determinant(const ExactMatrix& m) {
    if (!m.square())
        throw InputError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
    const int n = m.rows();
    std::vector<std::int64_t> small;
    small.reserve(m.entries().size());
    bool fits = true;
    for (const auto& x : m.entries()) {
        if (x < std::numeric_limits<std::int64_t>::min() || x > std::numeric_limits<std::int64_t>::max()) {
            fits = false;
            break;
        }
        small.push_back(static_cast<std::int64_t>(x));
    }
    if (fits)
        if (auto d = bareiss_int64(small, n)) return BigInt(*d);
    return bareiss_big(m.entries(), n);
}

ExactMatrix extract(const ExactMatrix& m, const SubmatrixSelector& s) {
    auto check = [](const std::vector<int>& idx, int bound, const char* what) {
        std::set<int> seen;
        for (int i : idx) {
            if (i < 0 || i >= bound)
                throw InputError(std::string(what) + " index " + std::to_string(i) + " out of range");
            if (!seen.insert(i).second) throw InputError(std::string("duplicate ") + what + " index " + std::to_string(i));
        }
    };
    check(s.rows, m.rows(), "row");
    check(s.cols, m.cols(), "column");
    ExactMatrix out(static_cast<int>(s.rows.size()), static_cast<int>(s.cols.size()));
    for (std::size_t r = 0; r < s.rows.size(); ++r)
        for (std::size_t c = 0; c < s.cols.size(); ++c)
            out(static_cast<int>(r), static_cast<int>(c)) = m(s.rows[r], s.cols[c]);
    std::vector<Element> rl, cl;
    if (!m.row_labels().empty())
        for (int r : s.rows) rl.push_back(m.row_labels()[r]);
    if (!m.col_labels().empty())
        for (int c : s.cols) cl.push_back(m.col_labels()[c]);
    out.set_labels(std::move(rl), std::move(cl));
    return out;
}

void write_matrix(std::ostream& out, const ExactMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
        out << '\n';
    }
}

ExactMatrix parse_matrix(std::istream& in) {
    int rows = -1, cols = -1;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0) throw InputError("matrix dump: bad dimension line");
    std::vector<BigInt> entries;
    entries.reserve(static_cast<std::size_t>(rows) * cols);
    std::string tok;
    for (long long i = 0; i < static_cast<long long>(rows) * cols; ++i) {
        if (!(in >> tok)) throw InputError("matrix dump: truncated");
        try {
            entries.emplace_back(tok);
        } catch (const std::exception&) {
            throw InputError("matrix dump: bad entry '" + tok + "'");
        }
    }
    return ExactMatrix(rows, cols, std::move(entries));
}

}  // namespace totalmatch
