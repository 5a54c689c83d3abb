#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "psum/core.hpp"

namespace psum {

enum class GenKind { range, near_linear, near_curved };

const char* gen_kind_name(GenKind kind);
GenKind gen_kind_from_name(const std::string& name);

/// Parameters for the three instance families.
struct GenSpec {
    GenKind kind = GenKind::range;
    std::int64_t n = 0;
    /// Coordinate range multiplier: W = range_factor * n. Must give W >= n-1.
    double range_factor = 2.0;
    /// Curve constant c for y = round(c/x); 0 selects the default n*W/2.
    std::int64_t curve_constant = 0;
    /// Fraction of points whose y is re-drawn between its neighbours.
    double perturb_fraction = 0.5;
    std::uint64_t seed = 1;

    std::int64_t range_bound() const;  // W
};

/// n distinct integers in [0, W], strictly increasing, in O(n + W) time:
/// W+1 counters receive n random increments, then a cyclic sweep pushes
/// surplus to the successor slot until every counter is 0 or 1.
/// Requires W >= n-1 (throws range_too_small_error).
std::vector<std::int64_t> gen_monotone_sequence(std::int64_t n, std::int64_t w,
                                                std::uint64_t seed);

/// y values for the curved family: y_i = round(c / x_i), then a right-to-left
/// repair pass restores strict decrease where rounding collided.
std::vector<std::int64_t> curve_y_values(std::int64_t curve_constant,
                                         const std::vector<std::int64_t>& xs);

std::pair<ParetoSet, ParetoSet> gen_range_instance(const GenSpec& spec);
std::pair<ParetoSet, ParetoSet> gen_function_instance(const GenSpec& spec);

/// Dispatch on spec.kind.
std::pair<ParetoSet, ParetoSet> generate_instance(const GenSpec& spec);

// Instance files: line 1 "n m", then n lines of "x y" for P and m for Q,
// decimal integers, single-space separated, LF endings.
// Result files: one "x y" per line in Pareto order.

std::pair<ParetoSet, ParetoSet> read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const ParetoSet& p, const ParetoSet& q);

std::vector<Point> read_result(const std::filesystem::path& path);
void write_result(const std::filesystem::path& path, const std::vector<Point>& points);

}  // namespace psum
