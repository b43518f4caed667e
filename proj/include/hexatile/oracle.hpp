#pragma once

// Independent brute-force engines. The workhorse is a sweep-line dynamic
// program over vertical strips: a lozenge tiling is a perfect matching of
// the dual graph, and the DP tracks, per strip interface, which cells are
// already covered by a lozenge crossing it. Weighted counts accumulate in
// exact rationals. Also here: the nonintersecting-path determinant for
// plain hexagons, plane-partition backtracking, and the six-term
// condensation recurrences checked entirely through the DP.

#include <hexatile/exact.hpp>
#include <hexatile/formulas.hpp>
#include <hexatile/region.hpp>

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

namespace hexatile {

inline constexpr long kDefaultMaxInterfaceWidth = 24;

namespace detail {

struct StripCells {
    std::vector<int> levels;  // sorted
    int index_of(int level) const {
        auto it = std::lower_bound(levels.begin(), levels.end(), level);
        return (it != levels.end() && *it == level) ? static_cast<int>(it - levels.begin()) : -1;
    }
};

}  // namespace detail

/// Exact weighted count of lozenge tilings (perfect matchings of the dual
/// graph, edge weight 1/2 on the region's half-weight pairs). Profile DP
/// over strips; throws capacity_error if a strip holds more cells than
/// max_width.
inline ExactRational count_tilings_value(const Region& region,
                                         long max_width = kDefaultMaxInterfaceWidth) {
    if (region.untileable()) return ExactRational(0);
    if (region.empty()) return ExactRational(1);
    if (region.size() % 2 != 0) return ExactRational(0);

    std::map<int, detail::StripCells> strips;
    for (TriCell c : region.cells()) strips[c.strip].levels.push_back(c.level);
    for (auto& [s, sc] : strips) {
        std::sort(sc.levels.begin(), sc.levels.end());
        if (static_cast<long>(sc.levels.size()) > max_width)
            throw capacity_error("count_tilings: strip " + std::to_string(s) + " holds " +
                                 std::to_string(sc.levels.size()) + " cells, limit " +
                                 std::to_string(max_width));
    }

    const int s_min = strips.begin()->first;
    const int s_max = strips.rbegin()->first;
    const detail::StripCells empty_strip;

    std::unordered_map<std::uint32_t, ExactRational> dp;
    dp[0] = ExactRational(1);

    for (int s = s_min; s <= s_max; ++s) {
        const detail::StripCells& cur =
            strips.count(s) ? strips.at(s) : empty_strip;
        const detail::StripCells& nxt =
            strips.count(s + 1) ? strips.at(s + 1) : empty_strip;
        const int n = static_cast<int>(cur.levels.size());

        std::unordered_map<std::uint32_t, ExactRational> next_dp;
        for (const auto& [mask_in, amount] : dp) {
            // Walk the strip bottom-up; each uncovered cell pairs either with
            // the cell directly above or (left-pointing only) rightward.
            struct Frame {
                int i;
                std::uint32_t covered;
                std::uint32_t out;
                ExactRational w;
            };
            std::vector<Frame> stack;
            stack.push_back({0, mask_in, 0, amount});
            while (!stack.empty()) {
                Frame f = stack.back();
                stack.pop_back();
                bool dead = false;
                while (f.i < n && (f.covered >> f.i) & 1u) ++f.i;
                if (f.i >= n) {
                    auto [it, inserted] = next_dp.try_emplace(f.out, f.w);
                    if (!inserted) it->second += f.w;
                    continue;
                }
                const TriCell cell{s, cur.levels[f.i]};
                // pair rightward across the vertical edge
                if (region.orientation(cell) == Orientation::LeftPointing) {
                    const int j = nxt.index_of(cell.level);
                    if (j >= 0) {
                        TriCell right{s + 1, cell.level};
                        stack.push_back({f.i + 1, f.covered,
                                         f.out | (1u << j),
                                         f.w * region.lozenge_weight(cell, right)});
                    }
                }
                // pair with the cell above in the same strip
                if (f.i + 1 < n && cur.levels[f.i + 1] == cell.level + 1 &&
                    !((f.covered >> (f.i + 1)) & 1u)) {
                    TriCell above{s, cell.level + 1};
                    stack.push_back({f.i + 2, f.covered | (1u << (f.i + 1)),
                                     f.out, f.w * region.lozenge_weight(cell, above)});
                }
                (void)dead;
            }
        }
        dp = std::move(next_dp);
        if (dp.empty()) return ExactRational(0);
    }
    auto it = dp.find(0);
    return it == dp.end() ? ExactRational(0) : it->second;
}

inline TilingCount count_tilings(const Region& region, RegionSpec spec = {},
                                 long max_width = kDefaultMaxInterfaceWidth) {
    return {count_tilings_value(region, max_width), "oracle:profile-dp", std::move(spec)};
}

/// Hexagon count through the nonintersecting-path determinant
/// det[ C(b+c, b-i+j) ]_{i,j=0..a-1}, evaluated with exact rational
/// elimination. Independent of both the product formula and the DP.
inline TilingCount count_tilings_lgv(long a, long b, long c) {
    if (a < 0 || b < 0 || c < 0) throw domain_error("count_tilings_lgv: sides must be nonnegative");
    const long n = a;
    std::vector<std::vector<ExactRational>> mat(n, std::vector<ExactRational>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) mat[i][j] = ExactRational(binomial(b + c, b - i + j));
    ExactRational det(1);
    for (long col = 0; col < n; ++col) {
        long pivot = -1;
        for (long row = col; row < n; ++row)
            if (mat[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) {
            det = 0;
            break;
        }
        if (pivot != col) {
            std::swap(mat[pivot], mat[col]);
            det = -det;
        }
        det *= mat[col][col];
        for (long row = col + 1; row < n; ++row) {
            if (mat[row][col] == 0) continue;
            const ExactRational factor = mat[row][col] / mat[col][col];
            for (long j = col; j < n; ++j) mat[row][j] -= factor * mat[col][j];
        }
    }
    return {det, "oracle:lgv-determinant",
            {RegionFamily::Hexagon, {{"a", a}, {"b", b}, {"c", c}}}};
}

namespace detail {

inline long count_pp_rec(long b, long c, long h, long d, long row, long col,
                         std::vector<std::vector<long>>& grid) {
    if (row == b) return 1;
    const long next_row = col + 1 == c ? row + 1 : row;
    const long next_col = col + 1 == c ? 0 : col + 1;
    const long above = row > 0 ? grid[row - 1][col] : h;
    const long left = col > 0 ? grid[row][col - 1] : h;
    const long hi = std::min(above, left);
    // pinned anti-diagonal entries (row + col == b - 1 in 0-based terms,
    // within the first d anti-diagonal positions from the bottom-left)
    const bool pinned = d > 0 && row + col == b - 1 && col < d;
    long total = 0;
    if (pinned) {
        const long v = h / 2;
        if (v > hi) return 0;
        grid[row][col] = v;
        total = count_pp_rec(b, c, h, d, next_row, next_col, grid);
    } else {
        for (long v = 0; v <= hi; ++v) {
            grid[row][col] = v;
            total += count_pp_rec(b, c, h, d, next_row, next_col, grid);
        }
    }
    return total;
}

}  // namespace detail

/// Count b x c arrays, weakly decreasing along rows and columns, with
/// entries in [0, h], by direct backtracking.
inline long enumerate_pp(long b, long c, long h) {
    if (b < 0 || c < 0 || h < 0) throw domain_error("enumerate_pp: parameters must be nonnegative");
    if (b * c > 20 || h > 8)
        throw capacity_error("enumerate_pp: capacity is b*c <= 20, h <= 8");
    if (b == 0 || c == 0) return 1;
    std::vector<std::vector<long>> grid(b, std::vector<long>(c, 0));
    return detail::count_pp_rec(b, c, h, 0, 0, 0, grid);
}

/// As enumerate_pp, but with the d anti-diagonal entries counted from the
/// bottom-left pinned to h/2. Requires even h.
inline long count_pp_restricted(long b, long c, long h, long d) {
    if (b < 0 || c < 0 || h < 0 || d < 0)
        throw domain_error("count_pp_restricted: parameters must be nonnegative");
    if (h % 2 != 0) throw domain_error("count_pp_restricted: h must be even");
    if (d > std::min(b, c)) throw domain_error("count_pp_restricted: need d <= min(b,c)");
    if (b * c > 20 || h > 8)
        throw capacity_error("count_pp_restricted: capacity is b*c <= 20, h <= 8");
    if (b == 0 || c == 0) return 1;
    std::vector<std::vector<long>> grid(b, std::vector<long>(c, 0));
    return detail::count_pp_rec(b, c, h, d, 0, 0, grid);
}

enum class KuoVariant { Eq48, Eq49 };

/// Checks one of the two six-term condensation recurrences with every term
/// evaluated by the profile DP on the actual regions:
///   Eq48: M(2a+1,b,c;k) M(2a,b,c;k+1)
///           = M(2a,b+1,c;k+1) M(2a+1,b-1,c;k) + M(2a,b,c+1;k+1) M(2a+1,b,c-1;k)
///   Eq49: M(2a+1,b,c;k) M(2a,b,c;k)
///           = M(2a,b+1,c;k) M(2a+1,b-1,c;k) + M(2a,b,c+1;k) M(2a+1,b,c-1;k)
inline bool kuo_check(KuoVariant variant, long a, long b, long c, long k,
                      long max_width = kDefaultMaxInterfaceWidth) {
    if (a < 0 || b < 1 || c < 1 || k < 0)
        throw domain_error("kuo_check: need a >= 0, b,c >= 1, k >= 0");
    const long kmax = std::min(b, c) - (variant == KuoVariant::Eq48 ? 1 : 0);
    if (k > kmax) throw domain_error("kuo_check: k out of range");
    auto M = [max_width](long m, long bb, long cc, long dd) {
        return count_tilings_value(build_intruded(m, bb, cc, dd), max_width);
    };
    const long k2 = variant == KuoVariant::Eq48 ? k + 1 : k;
    const ExactRational lhs = M(2 * a + 1, b, c, k) * M(2 * a, b, c, k2);
    const ExactRational rhs = M(2 * a, b + 1, c, k2) * M(2 * a + 1, b - 1, c, k) +
                              M(2 * a, b, c + 1, k2) * M(2 * a + 1, b, c - 1, k);
    return lhs == rhs;
}

/// Exactness check for the axis factorization: the symmetric intruded
/// region against 2^(c-d) times the product of its weighted bottom part
/// and its top part, all three counts by the DP.
inline bool factorization_identity_check(long m, long c, long d,
                                         long max_width = kDefaultMaxInterfaceWidth) {
    if (d < 0 || d > c) throw domain_error("factorization_identity_check: need 0 <= d <= c");
    const ExactRational whole = count_tilings_value(build_intruded(m, c, c, d), max_width);
    auto [bottom, top] = split_factorization(m, c, d);
    const ExactRational rhs = pow2(c - d) * count_tilings_value(bottom, max_width) *
                              count_tilings_value(top, max_width);
    return whole == rhs;
}

}  // namespace hexatile
