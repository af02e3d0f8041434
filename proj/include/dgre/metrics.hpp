#ifndef DGRE_METRICS_HPP
#define DGRE_METRICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgre/counters.hpp"
#include "dgre/model.hpp"
#include "dgre/sopf.hpp"

namespace dgre {

enum class OpKind {
    set_union,
    set_difference,
    set_concat,
    pt,
    ht,
    tt,
    arc_insert,
    arc_omit,
    node_insert,
    node_omit,
};

std::string_view to_string(OpKind kind);
std::vector<OpKind> all_op_kinds();

struct MeasureInput {
    OpKind kind;
    SopfRe a, b;                        // set operations; a is R for pt/ht/tt
    std::optional<TermPattern> pattern; // pt/ht/tt
    std::optional<ModelState> state;    // model operators
    std::optional<MutationOp> op;       // model operators
};

struct Measurement {
    OpCounters counters;
    SopfRe result;
};

// Runs the operation with a fresh measurement context.
Measurement measure(const MeasureInput& in);
// Same operation without counters.
SopfRe run_uncounted(const MeasureInput& in);

// Worst-case growth exponent in |P| with |p| fixed.
double bound_exponent(OpKind kind);

inline constexpr double kExponentSlack = 0.3;

struct SeriesPoint {
    double size;
    std::uint64_t cost;
};

struct TrendReport {
    std::string name;
    std::vector<SeriesPoint> series;
    double fitted_exponent = 0;
    double bound_exponent = 0;
    bool pass = false;
};

// Least-squares slope of log(cost) against log(size). Throws Error on
// fewer than four points or a zero cost.
TrendReport trend(std::string name, std::vector<SeriesPoint> series, double bound_exponent);

// Input with |P| about `size` terms and fixed term length.
MeasureInput corpus_input(OpKind kind, std::size_t size);
TrendReport measure_trend(OpKind kind, const std::vector<std::size_t>& sizes);
std::vector<TrendReport> run_bench(const std::vector<std::size_t>& sizes);

std::string format_pretty(const std::vector<TrendReport>& reports);
// One key=value record per series point.
std::string format_machine(const std::vector<TrendReport>& reports);

} // namespace dgre

#endif
