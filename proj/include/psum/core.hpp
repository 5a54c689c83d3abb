#pragma once

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "psum/errors.hpp"

namespace psum {

/// Coordinate magnitude cap. Keeps pairwise sums and cleared-denominator
/// comparisons inside 128-bit intermediates everywhere downstream.
inline constexpr std::int64_t kCoordCap = std::int64_t{1} << 40;

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Point&, const Point&) = default;
    friend Point operator+(Point a, Point b) { return Point{a.x + b.x, a.y + b.y}; }
};

inline bool lex_less(Point a, Point b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
}

/// a dominates b: componentwise <= with at least one strict coordinate.
/// Equal points do not dominate each other.
inline bool dominates(Point a, Point b) {
    return a.x <= b.x && a.y <= b.y && (a.x < b.x || a.y < b.y);
}

/// Dominates or equal. The filter predicate used by all sweep loops.
inline bool weakly_dominates(Point a, Point b) {
    return a.x <= b.x && a.y <= b.y;
}

inline std::int64_t l1_norm(Point p) {
    return std::abs(p.x) + std::abs(p.y);
}

/// A sum point together with the index pair that produced it.
/// Witness indices are -1 when the producing algorithm does not report them.
struct WitnessedPoint {
    Point point;
    std::int64_t witness_p = -1;
    std::int64_t witness_q = -1;

    bool has_witness() const { return witness_p >= 0 && witness_q >= 0; }
};

/// True iff pts is strictly increasing in x, strictly decreasing in y,
/// and all coordinates are within the magnitude cap.
bool validate_pareto_set(const std::vector<Point>& pts);

/// Non-dominated subset of pts, deduplicated, in Pareto order
/// (x strictly increasing, y strictly decreasing).
/// Throws empty_input_error on empty input.
std::vector<Point> pareto_front(std::vector<Point> pts);

/// 2-D Pareto set: points strictly increasing in x, strictly decreasing in y.
struct ParetoSet {
    std::vector<Point> points;

    /// Validating constructor for already-ordered input; throws invariant_error.
    static ParetoSet from_sorted(std::vector<Point> pts);
    /// Filters arbitrary points through pareto_front first.
    static ParetoSet from_points(std::vector<Point> pts);

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    const Point& operator[](std::size_t i) const { return points[i]; }

    /// Max coordinate over both axes (the bound W of a bounded instance).
    std::int64_t bound() const;

    std::int64_t min_x() const { return points.front().x; }
    std::int64_t max_x() const { return points.back().x; }
    std::int64_t max_y() const { return points.front().y; }
    std::int64_t min_y() const { return points.back().y; }
};

/// Ground-truth Pareto sum: enumerates all |P|*|Q| pair sums and keeps the
/// skyline. Witness tie-break: lexicographically smallest (witness_p, witness_q).
std::vector<WitnessedPoint> brute_force_pareto_sum(const ParetoSet& p, const ParetoSet& q);

inline std::vector<Point> strip_witnesses(const std::vector<WitnessedPoint>& wpts) {
    std::vector<Point> out;
    out.reserve(wpts.size());
    for (const auto& w : wpts) out.push_back(w.point);
    return out;
}

}  // namespace psum
