#include "dgre/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace dgre {

namespace {

const std::set<Symbol> kNoNeighbours;

[[noreturn]] void unknown_node(const Symbol& v) { throw GraphError("unknown node " + v.str()); }

std::string arc_name(const Symbol& from, const Symbol& to) { return "(" + from.str() + "," + to.str() + ")"; }

std::optional<std::vector<Symbol>> find_path(const Dg& g, const Symbol& from, const Symbol& to) {
    if (!g.has_node(from)) unknown_node(from);
    if (!g.has_node(to)) unknown_node(to);
    std::map<Symbol, Symbol> parent{{from, from}};
    std::deque<Symbol> queue{from};
    while (!queue.empty()) {
        Symbol v = queue.front();
        queue.pop_front();
        if (v == to) {
            std::vector<Symbol> path{v};
            while (path.back() != from) path.push_back(parent.at(path.back()));
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (const auto& w : g.successors(v))
            if (parent.emplace(w, v).second) queue.push_back(w);
    }
    return std::nullopt;
}

void omit_arc_with_flags(Dg& g, const Arc& a) {
    g.remove_arc(a);
    if (g.out_degree(a.from) == 0) g.set_finish(a.from);
    if (g.in_degree(a.to) == 0) g.set_start(a.to);
}

void insert_arc_checked(Dg& g, const Arc& a) {
    if (!g.has_node(a.from)) unknown_node(a.from);
    if (!g.has_node(a.to)) unknown_node(a.to);
    if (g.has_arc(a.from, a.to)) throw GraphError("arc " + arc_name(a.from, a.to) + " already exists");
    if (auto back = find_path(g, a.to, a.from)) {
        back->push_back(a.to);
        throw CycleError("inserting " + arc_name(a.from, a.to) + " would create a cycle", *back);
    }
    g.add_arc(a);
}

} // namespace

Arc::Arc(Symbol f, Symbol t) : from(std::move(f)), to(std::move(t)) {
    if (from == to) throw GraphError("self-loop on " + from.str());
}

bool Dg::has_arc(const Symbol& from, const Symbol& to) const {
    auto it = succ_.find(from);
    return it != succ_.end() && it->second.contains(to);
}

const std::set<Symbol>& Dg::successors(const Symbol& v) const {
    if (!has_node(v)) unknown_node(v);
    auto it = succ_.find(v);
    return it == succ_.end() ? kNoNeighbours : it->second;
}

const std::set<Symbol>& Dg::predecessors(const Symbol& v) const {
    if (!has_node(v)) unknown_node(v);
    auto it = pred_.find(v);
    return it == pred_.end() ? kNoNeighbours : it->second;
}

void Dg::add_node(const Symbol& v) {
    if (!nodes_.insert(v).second) throw GraphError("node " + v.str() + " already exists");
}

void Dg::add_arc(const Arc& a) {
    if (!has_node(a.from)) unknown_node(a.from);
    if (!has_node(a.to)) unknown_node(a.to);
    if (!arcs_.insert(a).second) throw GraphError("arc " + arc_name(a.from, a.to) + " already exists");
    succ_[a.from].insert(a.to);
    pred_[a.to].insert(a.from);
}

void Dg::remove_arc(const Arc& a) {
    if (!arcs_.erase(a)) throw GraphError("arc " + arc_name(a.from, a.to) + " does not exist");
    auto s = succ_.find(a.from);
    s->second.erase(a.to);
    if (s->second.empty()) succ_.erase(s);
    auto p = pred_.find(a.to);
    p->second.erase(a.from);
    if (p->second.empty()) pred_.erase(p);
}

void Dg::remove_node(const Symbol& v) {
    if (!has_node(v)) unknown_node(v);
    std::vector<Arc> incident;
    for (const auto& x : successors(v)) incident.emplace_back(v, x);
    for (const auto& y : predecessors(v)) incident.emplace_back(y, v);
    for (const auto& a : incident) remove_arc(a);
    nodes_.erase(v);
    starts_.erase(v);
    finishes_.erase(v);
}

void Dg::set_start(const Symbol& v, bool on) {
    if (!has_node(v)) unknown_node(v);
    if (on) starts_.insert(v);
    else starts_.erase(v);
}

void Dg::set_finish(const Symbol& v, bool on) {
    if (!has_node(v)) unknown_node(v);
    if (on) finishes_.insert(v);
    else finishes_.erase(v);
}

void Dg::flag_terminals() {
    for (const auto& v : nodes_) {
        if (in_degree(v) == 0) starts_.insert(v);
        if (out_degree(v) == 0) finishes_.insert(v);
    }
}

Dg parse_graph(std::string_view text) {
    Dg g;
    std::vector<std::pair<Symbol, std::size_t>> starts, finishes;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> tok;
        for (std::string w; words >> w;) tok.push_back(w);
        if (tok.empty()) continue;

        auto sym = [&](const std::string& id) {
            if (!is_valid_symbol(id)) throw ParseError("invalid node name '" + id + "'", lineno);
            return Symbol(id);
        };
        auto arity = [&](std::size_t n) {
            if (tok.size() != n + 1)
                throw ParseError("'" + tok[0] + "' expects " + std::to_string(n) + " argument(s)", lineno);
        };

        const std::string& kw = tok[0];
        if (kw == "node") {
            arity(1);
            Symbol v = sym(tok[1]);
            if (!g.has_node(v)) g.add_node(v);
        } else if (kw == "arc") {
            arity(2);
            Symbol from = sym(tok[1]), to = sym(tok[2]);
            if (from == to) throw ParseError("self-loop on " + from.str(), lineno);
            for (const auto& v : {from, to})
                if (!g.has_node(v)) g.add_node(v);
            if (g.has_arc(from, to)) throw ParseError("duplicate arc " + arc_name(from, to), lineno);
            g.add_arc(Arc(from, to));
        } else if (kw == "start") {
            arity(1);
            starts.emplace_back(sym(tok[1]), lineno);
        } else if (kw == "finish") {
            arity(1);
            finishes.emplace_back(sym(tok[1]), lineno);
        } else {
            throw ParseError("unknown keyword '" + kw + "'", lineno);
        }
    }

    for (const auto& [v, at] : starts)
        if (!g.has_node(v)) throw ParseError("start names unknown node " + v.str(), at);
    for (const auto& [v, at] : finishes)
        if (!g.has_node(v)) throw ParseError("finish names unknown node " + v.str(), at);

    for (const auto& v : g.nodes()) {
        if (starts.empty() ? g.in_degree(v) == 0 : false) g.set_start(v);
        if (finishes.empty() ? g.out_degree(v) == 0 : false) g.set_finish(v);
    }
    for (const auto& [v, at] : starts) g.set_start(v);
    for (const auto& [v, at] : finishes) g.set_finish(v);
    return g;
}

std::string render_graph(const Dg& g) {
    std::string out;
    for (const auto& v : g.nodes()) out += "node " + v.str() + "\n";
    for (const auto& a : g.arcs()) out += "arc " + a.from.str() + " " + a.to.str() + "\n";
    for (const auto& v : g.starts()) out += "start " + v.str() + "\n";
    for (const auto& v : g.finishes()) out += "finish " + v.str() + "\n";
    return out;
}

std::optional<std::vector<Symbol>> validate_acyclic(const Dg& g) {
    enum class Mark { fresh, open, done };
    std::map<Symbol, Mark> mark;
    std::vector<Symbol> stack;
    std::optional<std::vector<Symbol>> cycle;

    std::function<void(const Symbol&)> visit = [&](const Symbol& v) {
        mark[v] = Mark::open;
        stack.push_back(v);
        for (const auto& w : g.successors(v)) {
            if (cycle) return;
            Mark m = mark[w];
            if (m == Mark::open) {
                auto from = std::find(stack.begin(), stack.end(), w);
                cycle.emplace(from, stack.end());
                cycle->push_back(w);
                return;
            }
            if (m == Mark::fresh) visit(w);
        }
        stack.pop_back();
        mark[v] = Mark::done;
    };

    for (const auto& v : g.nodes()) {
        if (cycle) break;
        if (mark[v] == Mark::fresh) visit(v);
    }
    return cycle;
}

bool path_exists(const Dg& g, const Symbol& from, const Symbol& to) { return find_path(g, from, to).has_value(); }

SopfRe enumerate_paths(const Dg& g) {
    if (auto cycle = validate_acyclic(g)) throw CycleError("graph has a cycle", *cycle);
    std::vector<ProductTerm> terms;
    std::vector<Symbol> path;
    std::function<void(const Symbol&)> walk = [&](const Symbol& v) {
        path.push_back(v);
        if (g.is_finish(v)) terms.emplace_back(path);
        for (const auto& w : g.successors(v)) walk(w);
        path.pop_back();
    };
    for (const auto& s : g.starts()) walk(s);
    return SopfRe(std::move(terms));
}

Dg apply_dg_op(const Dg& g, const MutationOp& op) {
    check_well_formed(op);
    Dg out = g;
    struct Visitor {
        Dg& g;
        void operator()(const ArcInsert& o) const { insert_arc_checked(g, Arc(o.from, o.to)); }
        void operator()(const ArcOmit& o) const {
            if (!g.has_arc(o.from, o.to)) throw GraphError("arc " + arc_name(o.from, o.to) + " does not exist");
            omit_arc_with_flags(g, Arc(o.from, o.to));
        }
        void operator()(const NodeInsert& o) const {
            if (g.has_node(o.node)) throw GraphError("node " + o.node.str() + " already exists");
            for (const auto* group : {&o.outgoing, &o.ingoing})
                for (const auto& n : *group)
                    if (!g.has_node(n)) unknown_node(n);
            g.add_node(o.node);
            g.set_start(o.node);
            g.set_finish(o.node);
            for (const auto& x : o.outgoing) insert_arc_checked(g, Arc(o.node, x));
            for (const auto& y : o.ingoing) insert_arc_checked(g, Arc(y, o.node));
        }
        void operator()(const NodeOmit& o) const {
            if (!g.has_node(o.node)) unknown_node(o.node);
            auto outgoing = g.successors(o.node);
            auto ingoing = g.predecessors(o.node);
            for (const auto& x : outgoing) omit_arc_with_flags(g, Arc(o.node, x));
            for (const auto& y : ingoing) omit_arc_with_flags(g, Arc(y, o.node));
            g.remove_node(o.node);
        }
    };
    std::visit(Visitor{out}, op);
    return out;
}

} // namespace dgre
