#include "dgre/metrics.hpp"

#include <cmath>
#include <cstdio>

namespace dgre {

namespace {

// Base-16 digits of idx over symbols a..p, most significant first.
std::vector<Symbol> digits(std::size_t idx, std::size_t width) {
    std::vector<Symbol> out(width, Symbol("a"));
    for (std::size_t k = width; k-- > 0; idx /= 16) out[k] = Symbol(std::string(1, static_cast<char>('a' + idx % 16)));
    if (idx) throw Error("corpus size exceeds the fixed term length");
    return out;
}

ProductTerm synthetic(std::size_t idx, std::size_t width) { return ProductTerm(digits(idx, width)); }

SopfRe synthetic_range(std::size_t from, std::size_t count, std::size_t width) {
    std::vector<ProductTerm> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(synthetic(from + i, width));
    return SopfRe(std::move(out));
}

// head digits, x, y, tail digits; reversed tail keeps heads and tails distinct.
ProductTerm patterned(std::size_t idx, bool with_pattern) {
    auto h = digits(idx, 3);
    std::vector<Symbol> sym(h.begin(), h.end());
    sym.emplace_back(with_pattern ? "x" : "q");
    sym.emplace_back(with_pattern ? "y" : "q");
    sym.insert(sym.end(), h.rbegin(), h.rend());
    return ProductTerm(std::move(sym));
}

Symbol numbered(const char* prefix, std::size_t i) { return Symbol(prefix + std::to_string(i)); }

// s_i -> u for i < k, and v -> t_i for i < k.
Dg fan_pair(std::size_t k) {
    Dg g;
    for (const char* n : {"u", "v"}) g.add_node(Symbol(n));
    for (std::size_t i = 0; i < k; ++i) {
        g.add_node(numbered("s", i));
        g.add_node(numbered("t", i));
        g.add_arc(Arc(numbered("s", i), Symbol("u")));
        g.add_arc(Arc(Symbol("v"), numbered("t", i)));
    }
    g.flag_terminals();
    return g;
}

Dg chain_fan(std::size_t k, std::initializer_list<const char*> chain) {
    Dg g;
    const char* prev = nullptr;
    for (const char* n : chain) {
        g.add_node(Symbol(n));
        if (prev) g.add_arc(Arc(Symbol(prev), Symbol(n)));
        prev = n;
    }
    for (std::size_t i = 0; i < k; ++i) {
        g.add_node(numbered("s", i));
        g.add_arc(Arc(numbered("s", i), Symbol(*chain.begin())));
    }
    return g;
}

} // namespace

std::string_view to_string(OpKind kind) {
    switch (kind) {
    case OpKind::set_union: return "set_union";
    case OpKind::set_difference: return "set_difference";
    case OpKind::set_concat: return "set_concat";
    case OpKind::pt: return "pt";
    case OpKind::ht: return "ht";
    case OpKind::tt: return "tt";
    case OpKind::arc_insert: return "arc_insert";
    case OpKind::arc_omit: return "arc_omit";
    case OpKind::node_insert: return "node_insert";
    case OpKind::node_omit: return "node_omit";
    }
    return "?";
}

std::vector<OpKind> all_op_kinds() {
    return {OpKind::set_union, OpKind::set_difference, OpKind::set_concat, OpKind::pt,         OpKind::ht,
            OpKind::tt,        OpKind::arc_insert,     OpKind::arc_omit,   OpKind::node_insert, OpKind::node_omit};
}

namespace {

SopfRe run(const MeasureInput& in, OpCounters* ctr) {
    auto need_state = [&]() -> const ModelState& {
        if (!in.state || !in.op) throw Error(std::string(to_string(in.kind)) + " needs a model state and an operator");
        return *in.state;
    };
    auto need_pattern = [&]() -> const TermPattern& {
        if (!in.pattern) throw Error(std::string(to_string(in.kind)) + " needs a pattern");
        return *in.pattern;
    };
    switch (in.kind) {
    case OpKind::set_union: return set_union(in.a, in.b, ctr);
    case OpKind::set_difference: return set_difference(in.a, in.b, ctr);
    case OpKind::set_concat: return set_concat(in.a, in.b, ctr);
    case OpKind::pt: return pt(in.a, need_pattern(), ctr);
    case OpKind::ht: return ht(in.a, need_pattern(), ctr);
    case OpKind::tt: return tt(in.a, need_pattern(), ctr);
    case OpKind::arc_insert:
    case OpKind::arc_omit:
    case OpKind::node_insert:
    case OpKind::node_omit:
        return apply_op(need_state(), *in.op, ctr).state.re;
    }
    throw Error("unknown operation kind");
}

} // namespace

Measurement measure(const MeasureInput& in) {
    Measurement m;
    m.result = run(in, &m.counters);
    return m;
}

SopfRe run_uncounted(const MeasureInput& in) { return run(in, nullptr); }

double bound_exponent(OpKind kind) {
    switch (kind) {
    // O((|A||B|)^2 (|a|+|b|))
    case OpKind::set_concat: return 4;
    // O(|P|^2 |p|) with the concatenation left unfiltered
    case OpKind::arc_insert: return 2;
    default: return 2;
    }
}

TrendReport trend(std::string name, std::vector<SeriesPoint> series, double bound) {
    if (series.size() < 4) throw Error(name + ": a trend needs at least 4 points, got " + std::to_string(series.size()));
    double sx = 0, sy = 0;
    for (const auto& p : series) {
        if (p.cost == 0 || p.size <= 0) throw Error(name + ": degenerate series (zero cost or size)");
        sx += std::log(p.size);
        sy += std::log(static_cast<double>(p.cost));
    }
    const double n = static_cast<double>(series.size());
    const double mx = sx / n, my = sy / n;
    double sxy = 0, sxx = 0;
    for (const auto& p : series) {
        double dx = std::log(p.size) - mx;
        sxy += dx * (std::log(static_cast<double>(p.cost)) - my);
        sxx += dx * dx;
    }
    if (sxx == 0) throw Error(name + ": degenerate series (all sizes equal)");

    TrendReport rep{std::move(name), std::move(series)};
    rep.fitted_exponent = sxy / sxx;
    rep.bound_exponent = bound;
    rep.pass = rep.fitted_exponent <= bound + kExponentSlack;
    return rep;
}

MeasureInput corpus_input(OpKind kind, std::size_t size) {
    if (size < 2) throw Error("corpus size must be at least 2");
    MeasureInput in{kind};
    const std::size_t half = size / 2;
    switch (kind) {
    case OpKind::set_union:
    case OpKind::set_difference:
        in.a = synthetic_range(0, size, 4);
        in.b = synthetic_range(half, size, 4);
        break;
    case OpKind::set_concat:
        in.a = synthetic_range(0, size, 3);
        in.b = synthetic_range(0, size, 3);
        break;
    case OpKind::pt: {
        std::vector<ProductTerm> terms;
        for (std::size_t i = 0; i < size; ++i) terms.push_back(patterned(i, i % 2 == 0));
        in.a = SopfRe(std::move(terms));
        in.pattern = TermPattern(Symbol("x"), Symbol("y"));
        break;
    }
    case OpKind::ht:
    case OpKind::tt: {
        std::vector<ProductTerm> terms;
        for (std::size_t i = 0; i < size; ++i) terms.push_back(patterned(i, true));
        in.a = SopfRe(std::move(terms));
        in.pattern = TermPattern(Symbol("x"), Symbol("y"));
        break;
    }
    case OpKind::arc_insert:
        // |A'| = |B'| = size/2, so the insertion adds size^2/4 terms
        in.state = model_from_graph(fan_pair(half));
        in.op = ArcInsert{Symbol("u"), Symbol("v")};
        break;
    case OpKind::arc_omit: {
        // s_i -> u -> w and u -> x: size terms, half of them through (u,w)
        Dg g = chain_fan(half, {"u", "w"});
        g.add_node(Symbol("x"));
        g.add_arc(Arc(Symbol("u"), Symbol("x")));
        g.flag_terminals();
        in.state = model_from_graph(g);
        in.op = ArcOmit{Symbol("u"), Symbol("w")};
        break;
    }
    case OpKind::node_insert:
        // s + t = 2 arcs
        in.state = model_from_graph(fan_pair(half));
        in.op = NodeInsert{Symbol("m"), {Symbol("v")}, {Symbol("u")}};
        break;
    case OpKind::node_omit: {
        // s_i -> m -> u -> w; omitting u removes k = 2 arcs
        Dg g = chain_fan(size, {"m", "u", "w"});
        g.flag_terminals();
        in.state = model_from_graph(g);
        in.op = NodeOmit{Symbol("u")};
        break;
    }
    }
    return in;
}

TrendReport measure_trend(OpKind kind, const std::vector<std::size_t>& sizes) {
    std::vector<SeriesPoint> series;
    for (auto size : sizes) series.push_back({static_cast<double>(size), measure(corpus_input(kind, size)).counters.cost()});
    return trend(std::string(to_string(kind)), std::move(series), bound_exponent(kind));
}

std::vector<TrendReport> run_bench(const std::vector<std::size_t>& sizes) {
    if (sizes.size() < 4) throw Error("a trend needs at least 4 sizes, got " + std::to_string(sizes.size()));
    std::vector<TrendReport> out;
    for (auto kind : all_op_kinds()) out.push_back(measure_trend(kind, sizes));
    return out;
}

std::string format_pretty(const std::vector<TrendReport>& reports) {
    std::string out;
    char buf[256];
    for (const auto& r : reports) {
        std::snprintf(buf, sizeof buf, "%-15s exponent %5.2f  bound %4.1f + %.1f  %s\n", r.name.c_str(), r.fitted_exponent,
                      r.bound_exponent, kExponentSlack, r.pass ? "pass" : "FAIL");
        out += buf;
        for (const auto& p : r.series) {
            std::snprintf(buf, sizeof buf, "    |P| = %-6g cost %llu\n", p.size, static_cast<unsigned long long>(p.cost));
            out += buf;
        }
    }
    return out;
}

std::string format_machine(const std::vector<TrendReport>& reports) {
    std::string out;
    char buf[256];
    for (const auto& r : reports) {
        for (const auto& p : r.series) {
            std::snprintf(buf, sizeof buf, "series=%s size=%g cost=%llu exponent=%.4f bound=%g verdict=%s\n", r.name.c_str(),
                          p.size, static_cast<unsigned long long>(p.cost), r.fitted_exponent, r.bound_exponent,
                          r.pass ? "pass" : "fail");
            out += buf;
        }
    }
    return out;
}

} // namespace dgre
