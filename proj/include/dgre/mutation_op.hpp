#ifndef DGRE_MUTATION_OP_HPP
#define DGRE_MUTATION_OP_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dgre/symbol.hpp"

namespace dgre {

struct ArcInsert {
    Symbol from, to;
    friend bool operator==(const ArcInsert&, const ArcInsert&) = default;
};

struct ArcOmit {
    Symbol from, to;
    friend bool operator==(const ArcOmit&, const ArcOmit&) = default;
};

// outgoing holds the x of arcs (node, x); ingoing the y of arcs (y, node).
struct NodeInsert {
    Symbol node;
    std::vector<Symbol> outgoing;
    std::vector<Symbol> ingoing;
    friend bool operator==(const NodeInsert&, const NodeInsert&) = default;
};

struct NodeOmit {
    Symbol node;
    friend bool operator==(const NodeOmit&, const NodeOmit&) = default;
};

using MutationOp = std::variant<ArcInsert, ArcOmit, NodeInsert, NodeOmit>;

// Throws Error if a NodeInsert lists a neighbour twice or lists the node
// itself.
void check_well_formed(const MutationOp& op);

// Operator application notation: (cd)o_a, (c,d)i_a, (n)o_n,
// (v,{(v,b),(a,v)})i_n.
std::string format_op(const MutationOp& op);
std::string format_script(const std::vector<MutationOp>& ops);
std::vector<MutationOp> parse_script(std::string_view text);

} // namespace dgre

#endif
