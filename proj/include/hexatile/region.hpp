#pragma once

// Triangular-lattice regions with one vertical lattice-line family.
//
// Coordinates. Vertical lattice lines sit at integer x. A unit triangle is
// addressed by (strip, level): `strip` is the x-interval [strip, strip+1]
// it occupies, `level` counts half-unit vertical steps, so the cell spans
// doubled-y in [level, level+2]. A region carries a `phase` bit fixing
// where lattice points sit: on line x = s they have doubled-y == s + phase
// (mod 2). A cell is right-pointing (vertical edge on its left line, apex
// to the right) iff strip + level + phase is even:
//
//        right-pointing (s,l)          left-pointing (s,l)
//        (s,l+2) +                         + (s+1,l+2)
//                |\                       /|
//                | + (s+1,l+1)   (s,l+1) + |
//                |/                       \|
//        (s,l)   +                         + (s+1,l)
//
// Adjacent cells: (s,l) ~ (s,l+1) always (slanted shared edge), and
// (s,l) ~ (s+1,l) iff (s,l) is left-pointing (shared vertical edge).
//
// Region families are built from closed boundary paths on the lattice
// (all six unit directions), with cells enumerated by an exact
// centroid-in-polygon test, or from a hexagon minus cells along the
// perpendicular bisector of its left side (the bisector is doubled-y = 0,
// i.e. the cells at level -1).

#include <hexatile/exact.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hexatile {

struct TriCell {
    int strip = 0;
    int level = 0;
    friend auto operator<=>(const TriCell&, const TriCell&) = default;
};

enum class Orientation { LeftPointing, RightPointing };

using CellPair = std::pair<TriCell, TriCell>;  // stored with first < second

inline CellPair ordered_pair(TriCell a, TriCell b) {
    return a < b ? CellPair{a, b} : CellPair{b, a};
}

enum class RegionFamily { Hexagon, Intruded, HPrime, HDoublePrime, R, Rbar, PlusPart, MinusPart };

inline const char* family_name(RegionFamily f) {
    switch (f) {
        case RegionFamily::Hexagon: return "hexagon";
        case RegionFamily::Intruded: return "intruded";
        case RegionFamily::HPrime: return "hprime";
        case RegionFamily::HDoublePrime: return "hdoubleprime";
        case RegionFamily::R: return "r";
        case RegionFamily::Rbar: return "rbar";
        case RegionFamily::PlusPart: return "plus";
        case RegionFamily::MinusPart: return "minus";
    }
    return "?";
}

struct RegionSpec {
    RegionFamily family = RegionFamily::Hexagon;
    std::vector<std::pair<std::string, long>> params;

    std::string str() const {
        std::string s = family_name(family);
        s += "(";
        for (size_t i = 0; i < params.size(); ++i) {
            if (i) s += ",";
            s += params[i].first + "=" + std::to_string(params[i].second);
        }
        s += ")";
        return s;
    }
};

class Region {
public:
    Region() = default;
    Region(int phase, std::vector<TriCell> cells) : phase_(phase & 1), cells_(std::move(cells)) {
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    }

    int phase() const { return phase_; }
    const std::vector<TriCell>& cells() const { return cells_; }
    size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    const std::set<CellPair>& half_weight_pairs() const { return half_pairs_; }
    const std::map<char, TriCell>& marks() const { return marks_; }
    bool untileable() const { return untileable_; }

    bool contains(TriCell c) const {
        return std::binary_search(cells_.begin(), cells_.end(), c);
    }

    Orientation orientation(TriCell c) const {
        return ((c.strip + c.level + phase_) & 1) == 0 ? Orientation::RightPointing
                                                       : Orientation::LeftPointing;
    }

    /// Cells sharing a unit edge with c (whether or not they lie in the region).
    std::vector<TriCell> neighbor_candidates(TriCell c) const {
        std::vector<TriCell> out;
        out.push_back({c.strip, c.level - 1});
        out.push_back({c.strip, c.level + 1});
        if (orientation(c) == Orientation::LeftPointing)
            out.push_back({c.strip + 1, c.level});
        else
            out.push_back({c.strip - 1, c.level});
        return out;
    }

    std::vector<TriCell> neighbors(TriCell c) const {
        std::vector<TriCell> out;
        for (TriCell n : neighbor_candidates(c))
            if (contains(n)) out.push_back(n);
        return out;
    }

    bool adjacent(TriCell a, TriCell b) const {
        if (a.strip == b.strip) return std::abs(a.level - b.level) == 1;
        if (a.level != b.level) return false;
        TriCell left = a.strip < b.strip ? a : b;
        return b.strip + a.strip == 2 * left.strip + 1 &&
               orientation(left) == Orientation::LeftPointing;
    }

    void add_half_weight_pair(TriCell a, TriCell b) {
        if (!contains(a) || !contains(b) || !adjacent(a, b))
            throw domain_error("half-weight pair must join adjacent cells of the region");
        half_pairs_.insert(ordered_pair(a, b));
    }

    void set_mark(char label, TriCell c) {
        if (!contains(c)) throw domain_error("mark must reference a cell of the region");
        marks_[label] = c;
    }

    void set_untileable() { untileable_ = true; }

    ExactRational lozenge_weight(TriCell a, TriCell b) const {
        return half_pairs_.count(ordered_pair(a, b)) ? make_ratio(1, 2) : ExactRational(1);
    }

    std::pair<long, long> orientation_counts() const {  // (left, right)
        long l = 0, r = 0;
        for (TriCell c : cells_)
            (orientation(c) == Orientation::LeftPointing ? l : r)++;
        return {l, r};
    }

    /// Region with cells removed; weight pairs and marks touching them are dropped.
    Region without(const std::vector<TriCell>& gone) const {
        std::set<TriCell> dead(gone.begin(), gone.end());
        std::vector<TriCell> kept;
        kept.reserve(cells_.size());
        for (TriCell c : cells_)
            if (!dead.count(c)) kept.push_back(c);
        Region r(phase_, std::move(kept));
        for (const CellPair& p : half_pairs_)
            if (!dead.count(p.first) && !dead.count(p.second)) r.half_pairs_.insert(p);
        for (auto& [label, c] : marks_)
            if (!dead.count(c)) r.marks_[label] = c;
        r.untileable_ = untileable_;
        return r;
    }

    /// Mirror across a horizontal axis. Orientations are preserved
    /// (left-pointing stays left-pointing), weights and marks move with
    /// their cells; tiling counts are unchanged.
    Region flipped_vertical() const {
        return transformed([](TriCell c) { return TriCell{c.strip, -c.level - 2}; }, phase_);
    }

    /// Mirror across a vertical lattice line. Orientations swap, which the
    /// transformed phase accounts for; tiling counts are unchanged.
    Region flipped_horizontal() const {
        return transformed([](TriCell c) { return TriCell{-c.strip - 1, c.level}; }, phase_);
    }

    /// Translate so that min strip and min level are zero, adjusting the
    /// phase so orientations are preserved. Lets regions built at different
    /// origins be compared cell-for-cell.
    Region normalized() const {
        if (cells_.empty()) return Region(0, {});
        int s0 = cells_[0].strip, l0 = cells_[0].level;
        for (TriCell c : cells_) {
            s0 = std::min(s0, c.strip);
            l0 = std::min(l0, c.level);
        }
        std::vector<TriCell> moved;
        moved.reserve(cells_.size());
        for (TriCell c : cells_) moved.push_back({c.strip - s0, c.level - l0});
        Region r((phase_ + s0 + l0) & 1, std::move(moved));
        for (const CellPair& p : half_pairs_)
            r.half_pairs_.insert(ordered_pair({p.first.strip - s0, p.first.level - l0},
                                              {p.second.strip - s0, p.second.level - l0}));
        for (auto& [label, c] : marks_) r.marks_[label] = {c.strip - s0, c.level - l0};
        r.untileable_ = untileable_;
        return r;
    }

    friend bool operator==(const Region& a, const Region& b) {
        return a.phase_ == b.phase_ && a.cells_ == b.cells_ && a.half_pairs_ == b.half_pairs_ &&
               a.marks_ == b.marks_ && a.untileable_ == b.untileable_;
    }

private:
    template <typename F>
    Region transformed(F&& f, int phase) const {
        std::vector<TriCell> moved;
        moved.reserve(cells_.size());
        for (TriCell c : cells_) moved.push_back(f(c));
        Region r(phase, std::move(moved));
        for (const CellPair& p : half_pairs_)
            r.half_pairs_.insert(ordered_pair(f(p.first), f(p.second)));
        for (auto& [label, c] : marks_) r.marks_[label] = f(c);
        r.untileable_ = untileable_;
        return r;
    }

    int phase_ = 0;
    std::vector<TriCell> cells_;
    std::set<CellPair> half_pairs_;
    std::map<char, TriCell> marks_;
    bool untileable_ = false;
};

// ---------------------------------------------------------------------------
// Boundary paths and cell enumeration

/// Lattice point with doubled y coordinate.
struct LatticePoint {
    long x = 0;
    long y2 = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Closed boundary path builder. Each move appends one vertex per run of
/// unit steps in the same direction; zigzags append per step.
class BoundaryPath {
public:
    explicit BoundaryPath(LatticePoint start) { pts_.push_back(start); }

    BoundaryPath& north(long k) { return step(0, 2 * k); }
    BoundaryPath& south(long k) { return step(0, -2 * k); }
    BoundaryPath& northeast(long k) { return step(k, k); }
    BoundaryPath& southwest(long k) { return step(-k, -k); }
    BoundaryPath& southeast(long k) { return step(k, -k); }
    BoundaryPath& northwest(long k) { return step(-k, k); }

    /// k pairs of unit moves (first, second); used for the toothed zigzags
    /// running along the horizontal axes.
    BoundaryPath& zigzag(long k, long dx1, long dy1, long dx2, long dy2) {
        for (long i = 0; i < k; ++i) {
            step_units(dx1, dy1);
            step_units(dx2, dy2);
        }
        return *this;
    }

    bool closed() const { return pts_.size() >= 2 && pts_.front() == pts_.back(); }
    const std::vector<LatticePoint>& points() const { return pts_; }

    /// Twice the signed area in unit-triangle units; |.| equals the cell count.
    long shoelace_cells() const {
        long s = 0;
        for (size_t i = 0; i + 1 < pts_.size(); ++i)
            s += pts_[i].x * pts_[i + 1].y2 - pts_[i + 1].x * pts_[i].y2;
        return std::abs(s) / 2;
    }

private:
    BoundaryPath& step(long dx, long dy2) {
        if (dx != 0 || dy2 != 0)
            pts_.push_back({pts_.back().x + dx, pts_.back().y2 + dy2});
        return *this;
    }
    void step_units(long dx, long dy2) { step(dx, dy2); }

    std::vector<LatticePoint> pts_;
};

namespace detail {

/// Exact ray-cast: is the point (x3/3, y2) strictly inside the closed path?
inline bool point_in_path(const std::vector<LatticePoint>& pts, long x3, long y2) {
    bool inside = false;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        const LatticePoint& p = pts[i];
        const LatticePoint& q = pts[i + 1];
        if ((p.y2 > y2) == (q.y2 > y2)) continue;
        const long dy = q.y2 - p.y2;
        // crossing x minus point x, times 3*dy (sign-adjusted below)
        const long numer3 = 3 * p.x * dy + 3 * (q.x - p.x) * (y2 - p.y2) - x3 * dy;
        if ((numer3 > 0) == (dy > 0)) inside = !inside;
    }
    return inside;
}

}  // namespace detail

/// Enumerate the unit triangles enclosed by a closed boundary path.
/// Throws if the enumeration disagrees with the path's shoelace area.
inline Region region_from_path(const BoundaryPath& path, int phase) {
    if (!path.closed()) throw domain_error("boundary path is not closed");
    const auto& pts = path.points();
    long xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y2, ymax = pts[0].y2;
    for (const LatticePoint& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y2);
        ymax = std::max(ymax, p.y2);
    }
    std::vector<TriCell> cells;
    for (long s = xmin; s < xmax; ++s) {
        for (long l = ymin - 1; l < ymax; ++l) {
            const bool right = ((s + l + phase) & 1) == 0;
            const long cx3 = 3 * s + (right ? 1 : 2);
            if (detail::point_in_path(pts, cx3, l + 1))
                cells.push_back({static_cast<int>(s), static_cast<int>(l)});
        }
    }
    if (static_cast<long>(cells.size()) != path.shoelace_cells())
        throw std::logic_error("region_from_path: enumerated " + std::to_string(cells.size()) +
                               " cells, area says " + std::to_string(path.shoelace_cells()));
    return Region(phase, std::move(cells));
}

// ---------------------------------------------------------------------------
// Region families

/// Hexagon with sides a, b, c, a, b, c clockwise from the left (left side
/// vertical, length a), centered so the perpendicular bisector of the left
/// side is doubled-y = 0.
inline Region build_hexagon(long a, long b, long c) {
    if (a < 0 || b < 0 || c < 0) throw domain_error("build_hexagon: sides must be nonnegative");
    BoundaryPath p({0, -a});
    p.north(a).northeast(b).southeast(c).south(a).southwest(b).northwest(c);
    if (a == 0 && b == 0 && c == 0) return Region(0, {});
    Region r = region_from_path(p, static_cast<int>(a & 1));
    if (static_cast<long>(r.size()) != 2 * (a * b + b * c + c * a))
        throw std::logic_error("build_hexagon: cell count mismatch");
    return r;
}

/// Cells crossed by the bisector of the left side (level -1), left to right.
inline std::vector<TriCell> bisector_cells(const Region& hexagon) {
    std::vector<TriCell> on_axis;
    for (TriCell c : hexagon.cells())
        if (c.level == -1) on_axis.push_back(c);
    std::sort(on_axis.begin(), on_axis.end());
    return on_axis;
}

/// Hexagon with left side m and sides b, c, minus the first 2d unit
/// triangles along the bisector of the left side. For even m the removed
/// cells form d unit lozenges, for odd m d bowties. Valid whenever the 2d
/// triangles exist inside the hexagon (which covers d > min(b,c); such
/// regions are untileable but well-defined).
inline Region build_intruded(long m, long b, long c, long d) {
    if (m < 0 || b < 0 || c < 0 || d < 0)
        throw domain_error("build_intruded: parameters must be nonnegative");
    Region hex = build_hexagon(m, b, c);
    std::vector<TriCell> axis = bisector_cells(hex);
    if (static_cast<long>(axis.size()) < 2 * d)
        throw domain_error("build_intruded: hexagon (" + std::to_string(m) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ") has only " +
                           std::to_string(axis.size()) + " bisector cells, need " +
                           std::to_string(2 * d));
    axis.resize(2 * d);
    Region r = hex.without(axis);
    if (static_cast<long>(r.size()) != 2 * (m * b + b * c + c * m) - 2 * d)
        throw std::logic_error("build_intruded: cell count mismatch");
    return r;
}

namespace detail {

inline void add_axis_half_weights(Region& r, int level) {
    for (TriCell c : r.cells()) {
        if (c.level != level) continue;
        TriCell right{c.strip + 1, level};
        if (r.contains(right) && r.adjacent(c, right)) r.add_half_weight_pair(c, right);
    }
}

}  // namespace detail

/// Weighted region bounded below by a toothed zigzag along the horizontal
/// axis through a lattice point O (and, for m >= 1, a second zigzag along
/// the axis one unit northwest). Lozenges straddling the lower axis carry
/// weight 1/2.
inline Region build_R(long m, long n, long x) {
    if (n < 0 || m < 0 || (m == 0 ? x < -1 : x < 0))
        throw domain_error("build_R: need n,m >= 0 and x >= 0 (x >= -1 when m = 0)");
    BoundaryPath p({2 * n, 0});
    p.zigzag(n, -1, -1, -1, +1);  // A to O along the axis
    if (m == 0) {
        p.north(x + 1).northeast(n).southeast(n).south(x + 1);
    } else {
        p.north(1).southwest(1);      // O up and over to the upper axis
        p.zigzag(m, -1, -1, -1, +1);  // along the upper axis to B
        p.north(x).northeast(m + n + 1).southeast(m + n).south(x + 1);
    }
    Region r = region_from_path(p, 0);
    detail::add_axis_half_weights(r, -1);
    return r;
}

/// Companion region to build_R: the two axes are joined by a single unit
/// segment, and the upper-right boundary runs one unit lower. For n = 0 no
/// cell straddles the lower axis, so the region is unweighted.
inline Region build_Rbar(long m, long n, long x) {
    if (m < 0 || n < 0 || x < 0) throw domain_error("build_Rbar: parameters must be nonnegative");
    if (m == 0 && n == 0) return Region(0, {});
    BoundaryPath p = n >= 1 ? BoundaryPath({2 * n, 0}) : BoundaryPath({-1, 1});
    if (n >= 1) {
        p.zigzag(n, -1, -1, -1, +1);  // A to O
        p.northwest(1);               // O to the upper axis
    }
    p.zigzag(m, -1, -1, -1, +1);  // along the upper axis to B
    if (n >= 1)
        p.north(x).northeast(m + n).southeast(m + n + 1).south(x);
    else
        p.north(x).northeast(m).southeast(m).south(x);
    Region r = region_from_path(p, 0);
    detail::add_axis_half_weights(r, -1);
    return r;
}

/// Cut the symmetric intruded region with left side m and equal sides c
/// along its horizontal symmetry axis. Returns (bottom, top); the bottom
/// keeps weight-1/2 lozenge positions on the axis. For d = c the region is
/// already disconnected and the two components are returned.
inline std::pair<Region, Region> split_factorization(long m, long c, long d) {
    if (d > c) throw domain_error("split_factorization: need d <= c");
    Region whole = build_intruded(m, c, c, d);
    std::vector<TriCell> top_cells, bottom_cells;
    for (TriCell cell : whole.cells())
        (cell.level >= 0 ? top_cells : bottom_cells).push_back(cell);
    Region bottom(whole.phase(), std::move(bottom_cells));
    Region top(whole.phase(), std::move(top_cells));
    detail::add_axis_half_weights(bottom, -1);
    return {bottom, top};
}

struct ForcedLozengeResult {
    Region reduced;
    ExactRational weight_factor{1};
};

/// Strip away lozenges present in every tiling (cells with a single
/// possible partner), iterating to a fixed point. The weighted count
/// satisfies M(region) = weight_factor * M(reduced). A cell left with no
/// partner marks the region untileable (count 0).
inline ForcedLozengeResult remove_forced_lozenges(const Region& region) {
    ForcedLozengeResult res{region, ExactRational(1)};
    bool changed = true;
    while (changed) {
        changed = false;
        for (TriCell c : res.reduced.cells()) {
            std::vector<TriCell> nb = res.reduced.neighbors(c);
            if (nb.empty()) {
                res.reduced.set_untileable();
                return res;
            }
            if (nb.size() == 1) {
                res.weight_factor *= res.reduced.lozenge_weight(c, nb[0]);
                res.reduced = res.reduced.without({c, nb[0]});
                changed = true;
                break;
            }
        }
    }
    return res;
}

}  // namespace hexatile
