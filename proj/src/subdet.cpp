#include "totalmatch/subdet.hpp"

#include "totalmatch/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

namespace totalmatch {

std::vector<Element> ElementColoring::bichromatic() const {
    std::vector<Element> out;
    std::set_intersection(red.begin(), red.end(), cyan.begin(), cyan.end(), std::back_inserter(out));
    return out;
}

std::vector<Element> ElementColoring::monochromatic() const {
    std::vector<Element> out;
    std::set_symmetric_difference(red.begin(), red.end(), cyan.begin(), cyan.end(), std::back_inserter(out));
    return out;
}

std::string to_string(const ElementColoring& c) {
    std::string s = "red:";
    for (auto x : c.red) s += " " + to_string(x);
    s += " / cyan:";
    for (auto x : c.cyan) s += " " + to_string(x);
    return s;
}

ElementColoring parse_coloring(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tok;
    ElementColoring c;
    std::vector<Element>* target = nullptr;
    while (in >> tok) {
        if (tok == "red:")
            target = &c.red;
        else if (tok == "cyan:")
            target = &c.cyan;
        else if (tok == "/")
            target = nullptr;
        else if (target)
            target->push_back(parse_element(tok));
        else
            throw InputError("malformed coloring near '" + tok + "'");
    }
    std::sort(c.red.begin(), c.red.end());
    std::sort(c.cyan.begin(), c.cyan.end());
    return c;
}

std::string to_string(SubdetMode m) {
    switch (m) {
        case SubdetMode::Full: return "full";
        case SubdetMode::Principal: return "principal";
        case SubdetMode::Forced: return "forced";
    }
    return "?";
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

// Determinants are tracked modulo a Mersenne prime. For a k x k 0/1 matrix,
// Hadamard gives |det| <= (k+1)^((k+1)/2) / 2^k, which stays below p/2 up to
// k = 35; the symmetric residue is then the exact determinant.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;
constexpr int kMaxOrder = 34;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(x & kPrime) + static_cast<std::uint64_t>(x >> 61);
    return r >= kPrime ? r - kPrime : r;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

std::int64_t abs_symmetric(std::uint64_t x) {
    return x > kPrime / 2 ? static_cast<std::int64_t>(kPrime - x) : static_cast<std::int64_t>(x);
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_mul_overflow(a, b, &r) ? std::numeric_limits<std::uint64_t>::max() : r;
}

std::uint64_t sat_pow(std::uint64_t a, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r = sat_mul(r, a);
    return r;
}

/// Closed incidence neighbourhoods of the elements, as bit masks: bit j of
/// nb[i] is entry (i, j) of M(G).
std::vector<Mask> incidence_masks(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Mask> nb(g.element_count());
    for (int i = 0; i < g.element_count(); ++i) nb[i] = bit(i);
    for (EdgeId e = 1; e <= g.edge_count(); ++e) {
        const int ei = n + e - 1;
        for (VertexId v : {g.edge(e).u, g.edge(e).v}) {
            nb[ei] |= bit(v - 1);
            nb[v - 1] |= bit(ei);
        }
    }
    return nb;
}

Mask element_mask(const Graph& g, const std::vector<Element>& xs) {
    Mask m = 0;
    for (auto x : xs) {
        if (!g.valid(x)) throw InputError("invalid element " + to_string(x));
        m |= bit(g.element_index(x));
    }
    return m;
}

std::vector<Element> mask_elements(const Graph& g, Mask m) {
    std::vector<Element> out;
    for (; m; m &= m - 1) out.push_back(g.element_at(std::countr_zero(m)));
    return out;
}

/// Deposit the low bits of `compact` into the positions listed in `slots`.
Mask expand(Mask compact, const std::vector<int>& slots) {
    Mask out = 0;
    for (std::size_t i = 0; compact; ++i, compact >>= 1)
        if (compact & 1) out |= bit(slots[i]);
    return out;
}

Mask next_combination(Mask u) {
    const Mask c = u & (~u + 1);
    const Mask r = u + c;
    return (((r ^ u) >> 2) / c) | r;
}

struct SearchOutcome {
    std::int64_t value = 0;
    Mask rows = 0;
    Mask cols = 0;
    bool partial = false;
};

SearchOutcome principal_search(const std::vector<Mask>& nb, Mask forced, std::optional<std::int64_t> threshold);

/// Principal enumeration is cheap next to the full search and its maximum is
/// attained, so it serves as a starting incumbent for small instances.
constexpr int kSeedLimit = 20;

std::int64_t seed_lower_bound(const std::vector<Mask>& nb, Mask forced) {
    if (nb.size() > kSeedLimit) return 0;
    return principal_search(nb, forced, std::nullopt).value;
}

/// Exhaustive search over square submatrices M[R, C] with forced ⊆ R ∩ C.
/// Row sets are visited by size, then in increasing mask order; for each one a
/// depth-first pass over the available columns (highest index first, exclusion
/// before inclusion) visits column sets in increasing mask order. Columns are
/// reduced incrementally modulo kPrime, so dependent column sets are cut at the
/// first dependency.
class FullSearch {
public:
    FullSearch(std::vector<Mask> nb, Mask forced, bool minimal, std::optional<std::int64_t> threshold,
               std::int64_t lower_bound = 0)
        : nb_(std::move(nb)), size_(static_cast<int>(nb_.size())), forced_(forced), minimal_(minimal),
          threshold_(threshold), lower_bound_(lower_bound) {}

    SearchOutcome run() {
        const int f = std::popcount(forced_);
        std::vector<int> free_slots;
        for (int i = 0; i < size_; ++i)
            if (!(forced_ & bit(i))) free_slots.push_back(i);
        const int free_count = static_cast<int>(free_slots.size());
        for (int k = std::max(f, 1); k <= size_ && !best_.partial; ++k) {
            const int pick = k - f;
            if (pick > free_count) break;
            const Mask end = pick == free_count ? 0 : bit(free_count);
            Mask u = pick == 0 ? 0 : bit(pick) - 1;
            while (!best_.partial) {
                visit_rows(forced_ ? forced_ | expand(u, free_slots) : u, k);
                if (pick == 0 || pick == free_count) break;
                u = next_combination(u);
                if (u >= end) break;
            }
        }
        return best_;
    }

private:
    /// Candidates whose squared bound is at most this cannot change the result:
    /// either they do not beat a visited candidate, or they stay strictly below
    /// a value known to be attained.
    std::uint64_t floor_sq() const {
        const auto b = static_cast<std::uint64_t>(best_.value);
        const auto h = static_cast<std::uint64_t>(lower_bound_);
        return std::max(b * b, h > 0 ? h * h - 1 : 0);
    }

    void visit_rows(Mask rows, int k) {
        k_ = k;
        rows_mask_ = rows;
        need_ = k >= 2 ? 2 : 1;
        // Cheap mask tests first; most row sets stop here.
        Mask avail = 0;
        for (Mask m = rows; m; m &= m - 1) avail |= nb_[std::countr_zero(m)];
        for (Mask m = avail; m; m &= m - 1) {
            const int c = std::countr_zero(m);
            if (std::popcount(nb_[c] & rows) >= need_) continue;
            if (forced_ & bit(c)) return;
            avail &= ~bit(c);
        }
        if (std::popcount(avail) < k) return;
        row_ids_.clear();
        for (Mask m = rows; m; m &= m - 1) row_ids_.push_back(std::countr_zero(m));
        if (!rows_feasible(avail)) return;

        cols_.clear();
        for (int c = size_ - 1; c >= 0; --c) {
            if (!(avail & bit(c))) continue;
            // Column restricted to R, as bits over row positions.
            Mask colbits = 0;
            for (int i = 0; i < k; ++i)
                if (nb_[c] & bit(row_ids_[i])) colbits |= bit(i);
            cols_.push_back({c, colbits, static_cast<std::uint64_t>(std::popcount(colbits))});
        }

        // Two columns whose supports in R nest with at most one extra row form
        // a fault; a candidate shaped like a minimal witness holds neither both.
        conflict_.assign(cols_.size(), 0);
        if (minimal_ && k >= 2)
            for (std::size_t a = 0; a < cols_.size(); ++a)
                for (std::size_t b = 0; b < cols_.size(); ++b) {
                    if (a == b) continue;
                    const Mask x = cols_[a].rowbits, y = cols_[b].rowbits;
                    if ((x & ~y) == 0 && std::popcount(y & ~x) <= 1) {
                        conflict_[a] |= bit(cols_[b].index);
                        conflict_[b] |= bit(cols_[a].index);
                    }
                }

        suffix_max_.assign(cols_.size() + 1, 0);
        for (int i = static_cast<int>(cols_.size()) - 1; i >= 0; --i)
            suffix_max_[i] = std::max(suffix_max_[i + 1], cols_[i].count);

        depth_ = 0;
        chosen_ = 0;
        dfs(0, avail, 1.0, 1);
    }

    /// Every row keeps enough candidate columns, and the row Hadamard bound can
    /// still beat the incumbent.
    bool rows_feasible(Mask open) const {
        std::uint64_t bound = 1;
        for (int r : row_ids_) {
            const int cnt = std::popcount(nb_[r] & open);
            if (cnt < need_) return false;
            bound = sat_mul(bound, static_cast<std::uint64_t>(cnt));
        }
        if (bound <= floor_sq()) return false;
        if (!minimal_ || k_ < 2) return true;
        // A row fault survives any further shrinking of the column set.
        for (int a : row_ids_) {
            const Mask x = nb_[a] & open;
            for (int b : row_ids_) {
                if (a == b) continue;
                const Mask y = nb_[b] & open;
                if ((x & ~y) == 0 && std::popcount(y & ~x) <= 1) return false;
            }
        }
        return true;
    }

    void dfs(std::size_t idx, Mask open, double volume_sq, std::uint64_t det) {
        if (best_.partial) return;
        if (depth_ == k_) {
            // M is symmetric, so (C, R) has the same determinant; only C >= R
            // can carry the smaller key.
            if (chosen_ >= rows_mask_) leaf(det);
            return;
        }
        const int remaining = k_ - depth_;
        if (static_cast<int>(cols_.size() - idx) < remaining) return;
        const auto& col = cols_[idx];
        if (!(open & bit(col.index))) {
            if (forced_ & bit(col.index)) return;
            dfs(idx + 1, open, volume_sq, det);
            return;
        }
        {
            const Mask above = ~((bit(col.index) << 1) - 1);
            const Mask diff = chosen_ ^ (rows_mask_ & above);
            if (diff && !(chosen_ & bit(63 - std::countl_zero(diff)))) return;
        }
        // Fischer + Hadamard: |det [A B]|^2 <= vol(A)^2 * prod |b_j|^2, and the
        // b_j may be replaced by their projections orthogonal to span(A).
        const double floor = static_cast<double>(floor_sq()) * (1.0 - 1e-9);
        if (volume_sq * static_cast<double>(sat_pow(suffix_max_[idx], remaining)) < floor) return;
        if (depth_ > 0 && volume_sq * projected_bound(idx, remaining, open) < floor) return;

        if (!(forced_ & bit(col.index))) {
            const Mask without = open & ~bit(col.index);
            if (rows_feasible(without)) dfs(idx + 1, without, volume_sq, det);
            if (best_.partial) return;
        }

        // Include: reduce against the current basis, in basis order.
        auto& v = basis_[depth_];
        for (int i = 0; i < k_; ++i) v[i] = (col.rowbits >> i) & 1;
        for (int j = 0; j < depth_; ++j) {
            const std::uint64_t a = v[pivot_[j]];
            if (a == 0) continue;
            const auto& b = basis_[j];
            for (int i = 0; i < k_; ++i)
                if (b[i]) v[i] = submod(v[i], mulmod(a, b[i]));
        }
        int p = -1;
        for (int i = 0; i < k_; ++i)
            if (v[i] != 0 && !(pivot_rows_ & bit(i))) {
                p = i;
                break;
            }
        if (p < 0) return;  // dependent: every extension has determinant zero

        // Floating Gram-Schmidt, used only for the volume bound.
        auto& q = ortho_[depth_];
        for (int i = 0; i < k_; ++i) q[i] = static_cast<double>((col.rowbits >> i) & 1);
        for (int j = 0; j < depth_; ++j) {
            const auto& o = ortho_[j];
            double dot = 0;
            for (int i = 0; i < k_; ++i) dot += q[i] * o[i];
            for (int i = 0; i < k_; ++i) q[i] -= dot * o[i];
        }
        double norm_sq = 0;
        for (int i = 0; i < k_; ++i) norm_sq += q[i] * q[i];
        const double inv_norm = norm_sq > 0 ? 1.0 / std::sqrt(norm_sq) : 0.0;
        for (int i = 0; i < k_; ++i) q[i] *= inv_norm;

        const std::uint64_t pv = v[p];
        const std::uint64_t inv = invmod(pv);
        for (int i = 0; i < k_; ++i)
            if (v[i]) v[i] = mulmod(v[i], inv);
        pivot_[depth_] = p;
        pivot_rows_ |= bit(p);
        chosen_ |= bit(col.index);
        ++depth_;
        const Mask next_open = open & ~conflict_[idx];
        if (next_open == open || (!(open & forced_ & ~next_open) && rows_feasible(next_open)))
            dfs(idx + 1, next_open, volume_sq * norm_sq, mulmod(det, pv));
        --depth_;
        chosen_ &= ~bit(col.index);
        pivot_rows_ &= ~bit(p);
    }

    /// Product of the `take` largest squared norms of open columns idx..,
    /// projected orthogonally to the chosen columns.
    double projected_bound(std::size_t idx, int take, Mask open) {
        proj_.clear();
        for (std::size_t j = idx; j < cols_.size(); ++j) {
            if (!(open & bit(cols_[j].index))) continue;
            const Mask bits = cols_[j].rowbits;
            double norm_sq = static_cast<double>(cols_[j].count);
            for (int d = 0; d < depth_; ++d) {
                const auto& o = ortho_[d];
                double dot = 0;
                for (Mask m = bits; m; m &= m - 1) dot += o[std::countr_zero(m)];
                norm_sq -= dot * dot;
            }
            proj_.push_back(std::max(norm_sq, 0.0) * (1.0 + 1e-9) + 1e-9);
        }
        if (static_cast<int>(proj_.size()) < take) return 0.0;
        std::nth_element(proj_.begin(), proj_.begin() + (take - 1), proj_.end(), std::greater<>());
        double prod = 1.0;
        for (int i = 0; i < take; ++i) prod *= proj_[i];
        return prod;
    }

    bool has_fault() const {
        // Rows of M[R,C] as masks over C, columns as masks over R.
        auto faulty = [](const std::vector<Mask>& sets) {
            for (std::size_t a = 0; a < sets.size(); ++a)
                for (std::size_t b = 0; b < sets.size(); ++b) {
                    if (a == b) continue;
                    if ((sets[a] & ~sets[b]) == 0 && std::popcount(sets[b] & ~sets[a]) <= 1) return true;
                }
            return false;
        };
        std::vector<Mask> rows, cols;
        for (int r : row_ids_) rows.push_back(nb_[r] & chosen_);
        for (Mask m = chosen_; m; m &= m - 1) cols.push_back(nb_[std::countr_zero(m)] & rows_mask_);
        return faulty(rows) || faulty(cols);
    }

    void leaf(std::uint64_t det) {
        const std::int64_t value = abs_symmetric(det);
        if (value <= best_.value) return;
        if (minimal_ && k_ >= 2 && has_fault()) return;
        best_.value = value;
        best_.rows = rows_mask_;
        best_.cols = chosen_;
        if (threshold_ && value > *threshold_) best_.partial = true;
    }

    struct Column {
        int index;
        Mask rowbits;
        std::uint64_t count;
    };

    std::vector<Mask> nb_;
    int size_;
    Mask forced_;
    bool minimal_;
    std::optional<std::int64_t> threshold_;
    std::int64_t lower_bound_;
    SearchOutcome best_;

    int k_ = 0;
    int need_ = 1;
    Mask rows_mask_ = 0;
    std::vector<int> row_ids_;
    std::vector<Column> cols_;
    std::vector<Mask> conflict_;
    std::vector<std::uint64_t> suffix_max_;
    std::vector<double> proj_;
    int depth_ = 0;
    Mask chosen_ = 0;
    Mask pivot_rows_ = 0;
    std::array<int, 64> pivot_{};
    std::array<std::array<std::uint64_t, 64>, 64> basis_{};
    std::array<std::array<double, 64>, 64> ortho_{};
};

/// All principal submatrices M[S,S] with forced ⊆ S.
SearchOutcome principal_search(const std::vector<Mask>& nb, Mask forced, std::optional<std::int64_t> threshold) {
    const int size = static_cast<int>(nb.size());
    SearchOutcome best;
    std::vector<int> ids;
    std::vector<std::int64_t> buf;
    auto better = [&](std::int64_t value, Mask s) {
        if (value != best.value) return value > best.value;
        const int ks = std::popcount(s), kb = std::popcount(best.rows);
        return ks != kb ? ks < kb : s < best.rows;
    };
    const Mask limit = bit(size);
    for (Mask s = 0; s < limit; ++s) {
        if ((s & forced) != forced || s == 0) continue;
        ids.clear();
        bool reducible = false;
        for (Mask m = s; m; m &= m - 1) {
            const int i = std::countr_zero(m);
            ids.push_back(i);
            // A row with a single one: same determinant as S without it, which
            // has a smaller key and was visited already.
            if ((nb[i] & s) == bit(i) && !(forced & bit(i))) reducible = true;
        }
        if (reducible && ids.size() >= 2) continue;
        const int k = static_cast<int>(ids.size());
        buf.assign(static_cast<std::size_t>(k) * k, 0);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) buf[static_cast<std::size_t>(r) * k + c] = (nb[ids[r]] >> ids[c]) & 1;
        auto det = bareiss_int64(buf, k);
        if (!det) throw ResourceError("principal determinant overflowed 64 bits", k, kMaxOrder);
        const std::int64_t value = *det < 0 ? -*det : *det;
        if (better(value, s)) {
            best.value = value;
            best.rows = best.cols = s;
            if (threshold && value > *threshold) {
                best.partial = true;
                break;
            }
        }
    }
    return best;
}

std::optional<std::int64_t> threshold_of(const SubdetOptions& opts) {
    if (!opts.early_exit) return std::nullopt;
    if (*opts.early_exit >= std::numeric_limits<std::int64_t>::max())
        return std::numeric_limits<std::int64_t>::max();
    if (*opts.early_exit < 0) return -1;
    return static_cast<std::int64_t>(*opts.early_exit);
}

SubdetResult to_result(const Graph& g, const SearchOutcome& o, SubdetMode mode) {
    SubdetResult r;
    r.value = o.value;
    r.witness.red = mask_elements(g, o.rows);
    r.witness.cyan = mask_elements(g, o.cols);
    r.mode = mode;
    r.partial = o.partial;
    return r;
}

SubdetResult empty_result(SubdetMode mode) {
    SubdetResult r;
    r.value = 1;
    r.mode = mode;
    return r;
}

void check_full_cap(const Graph& g, const SubdetOptions& opts) {
    const auto size = static_cast<std::size_t>(g.element_count());
    const std::size_t cap = std::min<std::size_t>(opts.early_exit ? opts.hard_cap : opts.full_cap, kMaxOrder);
    if (size > cap)
        throw ResourceError("full subdeterminant search: n+m = " + std::to_string(size) + " exceeds cap " +
                                std::to_string(cap),
                            size, cap);
}

void check_principal_cap(const Graph& g, const SubdetOptions& opts) {
    const auto size = static_cast<std::size_t>(g.element_count());
    const std::size_t cap = std::min<std::size_t>(opts.principal_cap, 40);
    if (size > cap)
        throw ResourceError("principal subdeterminant search: n+m = " + std::to_string(size) + " exceeds cap " +
                                std::to_string(cap),
                            size, cap);
}

}  // namespace

SubdetResult max_subdet_brute(const Graph& g, const SubdetOptions& opts) {
    check_full_cap(g, opts);
    if (g.element_count() == 0) return empty_result(SubdetMode::Full);
    auto nb = incidence_masks(g);
    const auto seed = seed_lower_bound(nb, 0);
    FullSearch search(std::move(nb), 0, opts.minimal_witness_pruning, threshold_of(opts), seed);
    return to_result(g, search.run(), SubdetMode::Full);
}

SubdetResult max_subdet_principal(const Graph& g, const SubdetOptions& opts) {
    if (!g.is_forest()) throw PreconditionError("principal enumeration equals the maximum only for forests");
    check_principal_cap(g, opts);
    if (g.element_count() == 0) return empty_result(SubdetMode::Principal);
    return to_result(g, principal_search(incidence_masks(g), 0, threshold_of(opts)), SubdetMode::Principal);
}

SubdetResult max_subdet_forced_full(const Graph& g, const std::vector<Element>& forced, const SubdetOptions& opts) {
    const Mask f = element_mask(g, forced);
    check_full_cap(g, opts);
    if (g.element_count() == 0) return empty_result(SubdetMode::Forced);
    auto nb = incidence_masks(g);
    const auto seed = seed_lower_bound(nb, f);
    FullSearch search(std::move(nb), f, false, threshold_of(opts), seed);
    return to_result(g, search.run(), SubdetMode::Forced);
}

SubdetResult max_subdet_forced(const Graph& g, const std::vector<Element>& forced, const SubdetOptions& opts) {
    const Mask f = element_mask(g, forced);
    if (!g.is_forest()) return max_subdet_forced_full(g, forced, opts);
    check_principal_cap(g, opts);
    if (g.element_count() == 0) return empty_result(SubdetMode::Forced);
    return to_result(g, principal_search(incidence_masks(g), f, threshold_of(opts)), SubdetMode::Forced);
}

SubdetResult max_subdet_auto(const Graph& g, const SubdetOptions& opts) {
    if (g.is_forest() && static_cast<std::size_t>(g.element_count()) <= opts.principal_cap)
        return max_subdet_principal(g, opts);
    return max_subdet_brute(g, opts);
}

SubdetResult delta_by_components(const Graph& g, const ComponentSolver& solver) {
    SubdetResult total = empty_result(SubdetMode::Full);
    bool first = true;
    for (const auto& comp : components(g)) {
        SubdetResult r = solver(comp.graph);
        if (first) total.mode = r.mode;
        first = false;
        total.value *= r.value;
        total.partial = total.partial || r.partial;
        for (auto x : r.witness.red) total.witness.red.push_back(comp.to_host(x));
        for (auto x : r.witness.cyan) total.witness.cyan.push_back(comp.to_host(x));
    }
    std::sort(total.witness.red.begin(), total.witness.red.end());
    std::sort(total.witness.cyan.begin(), total.witness.cyan.end());
    return total;
}

BigInt witness_value(const Graph& g, const ElementColoring& c) {
    if (c.red.size() != c.cyan.size()) throw InputError("coloring is not square");
    SubmatrixSelector sel;
    for (auto x : c.red) {
        if (!g.valid(x)) throw InputError("invalid element " + to_string(x));
        sel.rows.push_back(g.element_index(x));
    }
    for (auto x : c.cyan) {
        if (!g.valid(x)) throw InputError("invalid element " + to_string(x));
        sel.cols.push_back(g.element_index(x));
    }
    BigInt d = determinant(extract(constraint_matrix(g), sel));
    return d < 0 ? BigInt(-d) : d;
}

}  // namespace totalmatch
