#include "psum/core.hpp"

#include <algorithm>
#include <tuple>

namespace psum {

bool validate_pareto_set(const std::vector<Point>& pts) {
    if (pts.empty()) return false;
    for (const Point& p : pts) {
        if (std::abs(p.x) > kCoordCap || std::abs(p.y) > kCoordCap) return false;
    }
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].x <= pts[i - 1].x) return false;
        if (pts[i].y >= pts[i - 1].y) return false;
    }
    return true;
}

std::vector<Point> pareto_front(std::vector<Point> pts) {
    if (pts.empty()) throw empty_input_error("pareto_front: empty input");
    std::sort(pts.begin(), pts.end(), lex_less);
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const Point& p : pts) {
        // Sorted by (x, y): p is dominated or duplicate iff the last kept
        // point has y <= p.y.
        if (!out.empty() && out.back().y <= p.y) continue;
        out.push_back(p);
    }
    return out;
}

ParetoSet ParetoSet::from_sorted(std::vector<Point> pts) {
    if (!validate_pareto_set(pts)) {
        throw invariant_error("ParetoSet: points violate Pareto order");
    }
    ParetoSet s;
    s.points = std::move(pts);
    return s;
}

ParetoSet ParetoSet::from_points(std::vector<Point> pts) {
    ParetoSet s;
    s.points = pareto_front(std::move(pts));
    return s;
}

std::int64_t ParetoSet::bound() const {
    std::int64_t w = 0;
    for (const Point& p : points) w = std::max({w, p.x, p.y});
    return w;
}

std::vector<WitnessedPoint> brute_force_pareto_sum(const ParetoSet& p, const ParetoSet& q) {
    std::vector<WitnessedPoint> sums;
    sums.reserve(p.size() * q.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            sums.push_back(WitnessedPoint{p[i] + q[j], static_cast<std::int64_t>(i),
                                          static_cast<std::int64_t>(j)});
        }
    }
    std::sort(sums.begin(), sums.end(), [](const WitnessedPoint& a, const WitnessedPoint& b) {
        return std::tie(a.point.x, a.point.y, a.witness_p, a.witness_q) <
               std::tie(b.point.x, b.point.y, b.witness_p, b.witness_q);
    });
    std::vector<WitnessedPoint> out;
    for (const WitnessedPoint& s : sums) {
        if (!out.empty() && out.back().point.y <= s.point.y) continue;
        out.push_back(s);
    }
    return out;
}

}  // namespace psum
