#ifndef DGRE_MODEL_HPP
#define DGRE_MODEL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "dgre/counters.hpp"
#include "dgre/graph.hpp"
#include "dgre/mutation_op.hpp"
#include "dgre/sopf.hpp"

namespace dgre {

// Raised by operators whose preconditions fail. Inside apply_script the
// 1-based position of the failing operator is recorded.
class MutationError : public Error {
public:
    explicit MutationError(const std::string& what, std::size_t op_index = 0)
        : Error(op_index ? "op " + std::to_string(op_index) + ": " + what : what),
          op_index_(op_index) {}
    std::size_t op_index() const { return op_index_; }

private:
    std::size_t op_index_;
};

// A graph and its regular expression, always transformed together.
struct ModelState {
    Dg dg;
    SopfRe re;
    friend bool operator==(const ModelState&, const ModelState&) = default;
};

// One arc-level RE update. For insertion, heads = |A'| and tails = |B'|;
// for omission, heads/tails are the sizes of A'/B' after the A = C and
// B = C tests, and cut = |C|.
struct ArcStep {
    enum class Kind { insert, omit } kind;
    Symbol from, to;
    std::size_t heads = 0;
    std::size_t tails = 0;
    std::size_t cut = 0;
    std::size_t terms_added = 0;
    std::size_t terms_removed = 0;
};

struct LogEntry {
    MutationOp op;
    std::size_t terms_added = 0;
    std::size_t terms_removed = 0;
    std::vector<ArcStep> arc_steps;
    // Set when the graph and term-set cycle checks disagree.
    std::string diagnostic;
};

using MutationLog = std::vector<LogEntry>;

struct Applied {
    ModelState state;
    LogEntry entry;
};

// re = enumerate_paths(g).
ModelState model_from_graph(const Dg& g);

Applied arc_insert(const ModelState& st, const Symbol& from, const Symbol& to, OpCounters* ctr = nullptr);
Applied arc_omit(const ModelState& st, const Symbol& from, const Symbol& to, OpCounters* ctr = nullptr);
// Outgoing arcs are inserted before ingoing ones, each group in the given
// order.
Applied node_insert(const ModelState& st, const Symbol& v, const std::vector<Symbol>& outgoing,
                    const std::vector<Symbol>& ingoing, OpCounters* ctr = nullptr);
// Omits outgoing then ingoing arcs, each group in canonical order, then the
// node itself.
Applied node_omit(const ModelState& st, const Symbol& v, OpCounters* ctr = nullptr);

Applied apply_op(const ModelState& st, const MutationOp& op, OpCounters* ctr = nullptr);

struct ScriptResult {
    ModelState state;
    MutationLog log;
};

// All-or-nothing: a failing operator throws MutationError naming its index.
ScriptResult apply_script(const ModelState& st, const std::vector<MutationOp>& ops);

} // namespace dgre

#endif
