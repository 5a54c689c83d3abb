#include "psum/generators.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "psum/rng.hpp"

namespace psum {

const char* gen_kind_name(GenKind kind) {
    switch (kind) {
        case GenKind::range: return "range";
        case GenKind::near_linear: return "near-linear";
        case GenKind::near_curved: return "near-curved";
    }
    return "?";
}

GenKind gen_kind_from_name(const std::string& name) {
    if (name == "range") return GenKind::range;
    if (name == "near-linear") return GenKind::near_linear;
    if (name == "near-curved") return GenKind::near_curved;
    throw config_error("unknown generator kind: " + name);
}

std::int64_t GenSpec::range_bound() const {
    return std::llround(range_factor * static_cast<double>(n));
}

std::vector<std::int64_t> gen_monotone_sequence(std::int64_t n, std::int64_t w,
                                                std::uint64_t seed) {
    if (n < 1) throw config_error("gen_monotone_sequence: n must be >= 1");
    if (w < n - 1) throw range_too_small_error("gen_monotone_sequence: need W >= n-1");
    if (w >= (std::int64_t{1} << 31)) {
        throw budget_exceeded_error("gen_monotone_sequence: W too large to materialize");
    }

    Xoshiro256 rng(seed);
    std::vector<std::int64_t> counter(static_cast<std::size_t>(w) + 1, 0);
    for (std::int64_t r = 0; r < n; ++r) {
        counter[uniform_below(rng, static_cast<std::uint64_t>(w) + 1)] += 1;
    }

    // Cyclic surplus sweep: a slot keeps one unit, the rest moves to its
    // successor (slot 0 succeeds slot W). Terminates after each slot has been
    // visited at most twice because the total count n fits in W+1 slots.
    const std::size_t slots = counter.size();
    std::size_t pos = 0;
    std::size_t consecutive_ok = 0;
    std::size_t steps = 0;
    const std::size_t step_cap = 3 * (slots + 1);
    while (consecutive_ok < slots) {
        if (counter[pos] > 1) {
            const std::int64_t carry = counter[pos] - 1;
            counter[pos] = 1;
            counter[(pos + 1) % slots] += carry;
            consecutive_ok = 0;
        } else {
            ++consecutive_ok;
        }
        pos = (pos + 1) % slots;
        if (++steps > step_cap) {
            throw std::logic_error("gen_monotone_sequence: sweep failed to settle");
        }
    }

    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < slots; ++i) {
        if (counter[i] == 1) out.push_back(static_cast<std::int64_t>(i));
    }
    return out;
}

std::vector<std::int64_t> curve_y_values(std::int64_t curve_constant,
                                         const std::vector<std::int64_t>& xs) {
    std::vector<std::int64_t> ys;
    ys.reserve(xs.size());
    for (std::int64_t x : xs) {
        if (x < 1) throw config_error("curve_y_values: x values must be >= 1");
        ys.push_back((curve_constant + x / 2) / x);  // round half up
    }
    // Rounding can merge neighbours; lift from the right to restore strict decrease.
    for (std::size_t i = ys.size(); i-- > 1;) {
        std::size_t left = i - 1;
        if (ys[left] <= ys[i]) ys[left] = ys[i] + 1;
    }
    return ys;
}

namespace {

ParetoSet pair_sequences(const std::vector<std::int64_t>& xs,
                         const std::vector<std::int64_t>& ys_desc_source) {
    std::vector<Point> pts(xs.size());
    const std::size_t n = xs.size();
    for (std::size_t i = 0; i < n; ++i) {
        pts[i] = Point{xs[i], ys_desc_source[n - 1 - i]};
    }
    return ParetoSet::from_sorted(std::move(pts));
}

void perturb_y(std::vector<Point>& pts, double fraction, Xoshiro256& rng) {
    const std::int64_t n = static_cast<std::int64_t>(pts.size());
    if (n < 3 || fraction <= 0.0) return;
    std::int64_t want = std::llround(fraction * static_cast<double>(n));
    std::int64_t interior = n - 2;
    want = std::min(want, interior);
    if (want <= 0) return;

    std::vector<std::int64_t> idx(static_cast<std::size_t>(interior));
    for (std::int64_t i = 0; i < interior; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    for (std::int64_t t = 0; t < want; ++t) {
        const std::uint64_t pick =
            uniform_below(rng, static_cast<std::uint64_t>(interior - t));
        std::swap(idx[static_cast<std::size_t>(t)],
                  idx[static_cast<std::size_t>(t + static_cast<std::int64_t>(pick))]);
    }
    idx.resize(static_cast<std::size_t>(want));
    std::sort(idx.begin(), idx.end());

    // Redraw y strictly between the current neighbour values, so strict
    // monotonicity survives regardless of how many points are touched.
    for (std::int64_t i : idx) {
        const std::size_t u = static_cast<std::size_t>(i);
        const std::int64_t lo = pts[u + 1].y + 1;
        const std::int64_t hi = pts[u - 1].y - 1;
        if (lo > hi) continue;
        pts[u].y = uniform_in(rng, lo, hi);
    }
}

ParetoSet gen_range_set(std::int64_t n, std::int64_t w, std::uint64_t seed) {
    std::uint64_t stream = seed;
    const std::uint64_t seed_x = splitmix64_next(stream);
    const std::uint64_t seed_y = splitmix64_next(stream);
    return pair_sequences(gen_monotone_sequence(n, w, seed_x),
                          gen_monotone_sequence(n, w, seed_y));
}

ParetoSet gen_function_set(const GenSpec& spec, std::int64_t w, std::uint64_t seed) {
    std::uint64_t stream = seed;
    const std::uint64_t seed_x = splitmix64_next(stream);
    const std::uint64_t seed_perturb = splitmix64_next(stream);

    std::vector<Point> pts;
    if (spec.kind == GenKind::near_linear) {
        if (w < spec.n) {
            throw range_too_small_error("near-linear: need W >= n distinct x values");
        }
        const auto xs = gen_monotone_sequence(spec.n, w - 1, seed_x);
        pts.reserve(xs.size());
        for (std::int64_t x : xs) pts.push_back(Point{x, w - x});
    } else {
        std::int64_t c = spec.curve_constant;
        if (c <= 0) c = spec.n * w / 2;
        if (c > kCoordCap) throw config_error("near-curved: curve constant exceeds coordinate cap");
        // Sample x no lower than c/W so that y = round(c/x) stays within the
        // declared coordinate range.
        const std::int64_t x_min = std::max<std::int64_t>(1, (c + w - 1) / w);
        if (w - x_min + 1 < spec.n) {
            throw range_too_small_error("near-curved: not enough distinct x values in range");
        }
        auto xs = gen_monotone_sequence(spec.n, w - x_min, seed_x);
        for (auto& x : xs) x += x_min;
        const auto ys = curve_y_values(c, xs);
        pts.reserve(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) pts.push_back(Point{xs[i], ys[i]});
    }

    Xoshiro256 rng(seed_perturb);
    perturb_y(pts, spec.perturb_fraction, rng);
    return ParetoSet::from_sorted(std::move(pts));
}

}  // namespace

std::pair<ParetoSet, ParetoSet> gen_range_instance(const GenSpec& spec) {
    if (spec.kind != GenKind::range) throw config_error("gen_range_instance: wrong kind");
    const std::int64_t w = spec.range_bound();
    if (w > kCoordCap) throw config_error("range: W exceeds coordinate cap");
    std::uint64_t stream = spec.seed;
    const std::uint64_t seed_p = splitmix64_next(stream);
    const std::uint64_t seed_q = splitmix64_next(stream);
    return {gen_range_set(spec.n, w, seed_p), gen_range_set(spec.n, w, seed_q)};
}

std::pair<ParetoSet, ParetoSet> gen_function_instance(const GenSpec& spec) {
    if (spec.kind == GenKind::range) throw config_error("gen_function_instance: wrong kind");
    if (spec.perturb_fraction < 0.0 || spec.perturb_fraction > 1.0) {
        throw config_error("perturb_fraction must be in [0, 1]");
    }
    const std::int64_t w = spec.range_bound();
    if (w > kCoordCap) throw config_error("W exceeds coordinate cap");
    std::uint64_t stream = spec.seed;
    const std::uint64_t seed_p = splitmix64_next(stream);
    const std::uint64_t seed_q = splitmix64_next(stream);
    return {gen_function_set(spec, w, seed_p), gen_function_set(spec, w, seed_q)};
}

std::pair<ParetoSet, ParetoSet> generate_instance(const GenSpec& spec) {
    return spec.kind == GenKind::range ? gen_range_instance(spec) : gen_function_instance(spec);
}

namespace {

std::int64_t read_int(std::istream& in, const char* what) {
    std::int64_t v;
    if (!(in >> v)) throw parse_error(std::string("expected integer: ") + what);
    return v;
}

std::vector<Point> read_points(std::istream& in, std::int64_t count, const char* block) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        Point p;
        p.x = read_int(in, block);
        p.y = read_int(in, block);
        pts.push_back(p);
    }
    return pts;
}

ParetoSet to_pareto_or_throw(std::vector<Point> pts, const char* block) {
    if (!validate_pareto_set(pts)) {
        throw invariant_error(std::string(block) + " block is not a valid Pareto set");
    }
    return ParetoSet::from_sorted(std::move(pts));
}

}  // namespace

std::pair<ParetoSet, ParetoSet> read_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open instance file: " + path.string());
    const std::int64_t n = read_int(in, "n");
    const std::int64_t m = read_int(in, "m");
    if (n < 1 || m < 1) throw parse_error("instance sizes must be >= 1");
    auto p_pts = read_points(in, n, "P");
    auto q_pts = read_points(in, m, "Q");
    std::string extra;
    if (in >> extra) throw parse_error("trailing content after Q block");
    return {to_pareto_or_throw(std::move(p_pts), "P"), to_pareto_or_throw(std::move(q_pts), "Q")};
}

void write_instance(const std::filesystem::path& path, const ParetoSet& p, const ParetoSet& q) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open file for writing: " + path.string());
    out << p.size() << ' ' << q.size() << '\n';
    for (const Point& pt : p.points) out << pt.x << ' ' << pt.y << '\n';
    for (const Point& pt : q.points) out << pt.x << ' ' << pt.y << '\n';
    if (!out) throw parse_error("write failed: " + path.string());
}

std::vector<Point> read_result(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open result file: " + path.string());
    std::vector<Point> pts;
    std::int64_t x;
    while (in >> x) {
        Point p;
        p.x = x;
        p.y = read_int(in, "result y");
        pts.push_back(p);
    }
    if (!validate_pareto_set(pts)) {
        throw invariant_error("result file is not a valid Pareto set: " + path.string());
    }
    return pts;
}

void write_result(const std::filesystem::path& path, const std::vector<Point>& points) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open file for writing: " + path.string());
    for (const Point& pt : points) out << pt.x << ' ' << pt.y << '\n';
    if (!out) throw parse_error("write failed: " + path.string());
}

}  // namespace psum
