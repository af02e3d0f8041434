#include "dgre/model.hpp"

#include <algorithm>
#include <utility>

namespace dgre {

namespace {

std::string arc_name(const Symbol& from, const Symbol& to) { return "(" + from.str() + "," + to.str() + ")"; }

void require_node(const Dg& g, const Symbol& v) {
    if (!g.has_node(v)) throw MutationError("unknown node " + v.str());
}

// A term in which `later` occurs before `earlier`, if any.
const ProductTerm* ordering_witness(const SopfRe& re, const Symbol& earlier, const Symbol& later) {
    for (const auto& t : re.terms()) {
        auto sym = t.symbols();
        auto first_later = std::find(sym.begin(), sym.end(), later);
        if (first_later != sym.end() && std::find(first_later + 1, sym.end(), earlier) != sym.end()) return &t;
    }
    return nullptr;
}

ProductTerm single(const Symbol& v) { return ProductTerm({v}); }

void record_net_change(LogEntry& entry, const SopfRe& before, const SopfRe& after) {
    entry.terms_added = set_difference(after, before).size();
    entry.terms_removed = set_difference(before, after).size();
}

void append_steps(LogEntry& into, LogEntry&& from) {
    for (auto& s : from.arc_steps) into.arc_steps.push_back(std::move(s));
    if (!from.diagnostic.empty()) {
        if (!into.diagnostic.empty()) into.diagnostic += "; ";
        into.diagnostic += from.diagnostic;
    }
}

} // namespace

ModelState model_from_graph(const Dg& g) {
    SopfRe re = enumerate_paths(g);
    return {g, std::move(re)};
}

Applied arc_insert(const ModelState& st, const Symbol& from, const Symbol& to, OpCounters* ctr) {
    require_node(st.dg, from);
    require_node(st.dg, to);
    if (from == to) throw MutationError("self-loop " + arc_name(from, to));
    if (st.dg.has_arc(from, to)) throw MutationError("arc " + arc_name(from, to) + " already exists");

    // The graph check is authoritative; the term-set check can miss paths
    // that no start-to-finish term covers after earlier mutations.
    const ProductTerm* witness = ordering_witness(st.re, from, to);
    if (path_exists(st.dg, to, from)) {
        std::string msg = "inserting " + arc_name(from, to) + " would create a cycle";
        if (witness) msg += " (term " + print_term(*witness, true) + ")";
        else msg += " (graph path only; no term orders " + to.str() + " before " + from.str() + ")";
        throw MutationError(msg);
    }

    LogEntry entry{ArcInsert{from, to}};
    if (witness)
        entry.diagnostic = "term " + print_term(*witness, true) + " orders " + to.str() + " before " + from.str() +
                           " but the graph has no such path";

    const SopfRe& r = st.re;
    SopfRe a = pt(r, TermPattern(from), ctr);
    SopfRe b = pt(r, TermPattern(to), ctr);
    SopfRe heads = ht(a, TermPattern(from), ctr);
    SopfRe tails = tt(b, TermPattern(to), ctr);
    SopfRe joined = set_concat(heads, tails, ctr);
    SopfRe next = set_union(r, joined, ctr);

    ArcStep step{ArcStep::Kind::insert, from, to, heads.size(), tails.size()};
    step.terms_added = next.size() - r.size();
    entry.terms_added = step.terms_added;
    entry.arc_steps.push_back(step);
    return {{apply_dg_op(st.dg, ArcInsert{from, to}), std::move(next)}, std::move(entry)};
}

Applied arc_omit(const ModelState& st, const Symbol& from, const Symbol& to, OpCounters* ctr) {
    require_node(st.dg, from);
    require_node(st.dg, to);
    if (from == to || !st.dg.has_arc(from, to)) throw MutationError("arc " + arc_name(from, to) + " does not exist");

    const SopfRe& r = st.re;
    SopfRe a = pt(r, TermPattern(from), ctr);
    SopfRe b = pt(r, TermPattern(to), ctr);
    SopfRe c = pt(r, TermPattern(from, to), ctr);
    SopfRe heads = a == c ? ht(a, TermPattern(from), ctr) : SopfRe{};
    SopfRe tails = b == c ? tt(b, TermPattern(to), ctr) : SopfRe{};
    SopfRe restored = set_union(heads, tails, ctr);
    SopfRe kept = set_difference(r, c, ctr);
    SopfRe next = set_union(kept, restored, ctr);

    ArcStep step{ArcStep::Kind::omit, from, to, heads.size(), tails.size(), c.size()};
    step.terms_removed = r.size() - kept.size();
    step.terms_added = next.size() - kept.size();

    LogEntry entry{ArcOmit{from, to}};
    entry.terms_added = step.terms_added;
    entry.terms_removed = step.terms_removed;
    entry.arc_steps.push_back(step);
    return {{apply_dg_op(st.dg, ArcOmit{from, to}), std::move(next)}, std::move(entry)};
}

Applied node_insert(const ModelState& st, const Symbol& v, const std::vector<Symbol>& outgoing,
                    const std::vector<Symbol>& ingoing, OpCounters* ctr) {
    NodeInsert op{v, outgoing, ingoing};
    try {
        check_well_formed(op);
    } catch (const Error& e) {
        throw MutationError(e.what());
    }
    if (st.dg.has_node(v)) throw MutationError("node " + v.str() + " already exists");
    for (const auto* group : {&outgoing, &ingoing})
        for (const auto& n : *group) require_node(st.dg, n);

    LogEntry entry{op};
    ModelState cur{apply_dg_op(st.dg, NodeInsert{v, {}, {}}), add_term(st.re, single(v), ctr)};
    for (const auto& x : outgoing) {
        Applied step = arc_insert(cur, v, x, ctr);
        cur = std::move(step.state);
        append_steps(entry, std::move(step.entry));
    }
    for (const auto& y : ingoing) {
        Applied step = arc_insert(cur, y, v, ctr);
        cur = std::move(step.state);
        append_steps(entry, std::move(step.entry));
    }
    if (!outgoing.empty() || !ingoing.empty()) cur.re = remove_term(cur.re, single(v), ctr);

    record_net_change(entry, st.re, cur.re);
    return {std::move(cur), std::move(entry)};
}

Applied node_omit(const ModelState& st, const Symbol& v, OpCounters* ctr) {
    require_node(st.dg, v);
    LogEntry entry{NodeOmit{v}};
    ModelState cur = st;
    std::vector<Symbol> outgoing(st.dg.successors(v).begin(), st.dg.successors(v).end());
    std::vector<Symbol> ingoing(st.dg.predecessors(v).begin(), st.dg.predecessors(v).end());
    for (const auto& x : outgoing) {
        Applied step = arc_omit(cur, v, x, ctr);
        cur = std::move(step.state);
        append_steps(entry, std::move(step.entry));
    }
    for (const auto& y : ingoing) {
        Applied step = arc_omit(cur, y, v, ctr);
        cur = std::move(step.state);
        append_steps(entry, std::move(step.entry));
    }
    cur.re = remove_term(cur.re, single(v), ctr);
    cur.dg = apply_dg_op(cur.dg, NodeOmit{v});

    record_net_change(entry, st.re, cur.re);
    return {std::move(cur), std::move(entry)};
}

Applied apply_op(const ModelState& st, const MutationOp& op, OpCounters* ctr) {
    struct Visitor {
        const ModelState& st;
        OpCounters* ctr;
        Applied operator()(const ArcInsert& o) const { return arc_insert(st, o.from, o.to, ctr); }
        Applied operator()(const ArcOmit& o) const { return arc_omit(st, o.from, o.to, ctr); }
        Applied operator()(const NodeInsert& o) const { return node_insert(st, o.node, o.outgoing, o.ingoing, ctr); }
        Applied operator()(const NodeOmit& o) const { return node_omit(st, o.node, ctr); }
    };
    return std::visit(Visitor{st, ctr}, op);
}

ScriptResult apply_script(const ModelState& st, const std::vector<MutationOp>& ops) {
    ScriptResult out{st, {}};
    for (std::size_t k = 0; k < ops.size(); ++k) {
        try {
            Applied step = apply_op(out.state, ops[k]);
            out.state = std::move(step.state);
            out.log.push_back(std::move(step.entry));
        } catch (const Error& e) {
            throw MutationError(format_op(ops[k]) + ": " + e.what(), k + 1);
        }
    }
    return out;
}

} // namespace dgre
