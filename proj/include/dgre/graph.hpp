#ifndef DGRE_GRAPH_HPP
#define DGRE_GRAPH_HPP

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dgre/mutation_op.hpp"
#include "dgre/sopf.hpp"
#include "dgre/symbol.hpp"

namespace dgre {

class GraphError : public Error {
public:
    using Error::Error;
};

class CycleError : public GraphError {
public:
    CycleError(const std::string& what, std::vector<Symbol> witness)
        : GraphError(what), witness_(std::move(witness)) {}
    const std::vector<Symbol>& witness() const { return witness_; }

private:
    std::vector<Symbol> witness_;
};

// A directed arc; self-loops are rejected on construction.
struct Arc {
    Symbol from;
    Symbol to;

    Arc(Symbol f, Symbol t);
    friend bool operator==(const Arc&, const Arc&) = default;
    friend std::strong_ordering operator<=>(const Arc&, const Arc&) = default;
};

// Directed graph with start/finish designations. The low-level mutators
// keep the node/arc sets consistent but do not check acyclicity or touch
// flags; apply_dg_op layers the operator semantics on top.
class Dg {
public:
    const std::set<Symbol>& nodes() const { return nodes_; }
    const std::set<Arc>& arcs() const { return arcs_; }
    const std::set<Symbol>& starts() const { return starts_; }
    const std::set<Symbol>& finishes() const { return finishes_; }

    bool has_node(const Symbol& v) const { return nodes_.contains(v); }
    bool has_arc(const Symbol& from, const Symbol& to) const;
    bool is_start(const Symbol& v) const { return starts_.contains(v); }
    bool is_finish(const Symbol& v) const { return finishes_.contains(v); }

    // Throw GraphError on unknown nodes.
    const std::set<Symbol>& successors(const Symbol& v) const;
    const std::set<Symbol>& predecessors(const Symbol& v) const;
    std::size_t out_degree(const Symbol& v) const { return successors(v).size(); }
    std::size_t in_degree(const Symbol& v) const { return predecessors(v).size(); }

    void add_node(const Symbol& v);
    void add_arc(const Arc& a);
    void remove_arc(const Arc& a);
    // Drops the node, its flags and every incident arc.
    void remove_node(const Symbol& v);
    void set_start(const Symbol& v, bool on = true);
    void set_finish(const Symbol& v, bool on = true);
    // in-degree 0 => start, out-degree 0 => finish.
    void flag_terminals();

    friend bool operator==(const Dg&, const Dg&) = default;

private:
    std::set<Symbol> nodes_;
    std::set<Arc> arcs_;
    std::set<Symbol> starts_;
    std::set<Symbol> finishes_;
    std::map<Symbol, std::set<Symbol>> succ_;
    std::map<Symbol, std::set<Symbol>> pred_;
};

// Parses the line-oriented graph format:
//   node <id> | arc <id> <id> | start <id> | finish <id>, '#' comments.
// Unless a start (finish) line is present, in-degree 0 (out-degree 0)
// nodes are flagged start (finish).
Dg parse_graph(std::string_view text);
std::string render_graph(const Dg& g);

// nullopt if acyclic, otherwise one cycle as v0 v1 ... v0.
std::optional<std::vector<Symbol>> validate_acyclic(const Dg& g);
// Reflexive: path_exists(g, v, v) is true.
bool path_exists(const Dg& g, const Symbol& from, const Symbol& to);
// All start-to-finish node sequences, as a canonical term set.
SopfRe enumerate_paths(const Dg& g);

// Graph half of the mutation operators. Omitting an arc flags an endpoint
// left without outgoing (ingoing) arcs as finish (start); flags are never
// cleared. Inserted nodes are flagged start and finish.
Dg apply_dg_op(const Dg& g, const MutationOp& op);

} // namespace dgre

#endif
