#include "dgre/mutation_op.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace dgre {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string arc_args(const Symbol& from, const Symbol& to) {
    if (from.size() == 1 && to.size() == 1) return "(" + from.str() + to.str() + ")";
    return "(" + from.str() + "," + to.str() + ")";
}

class ScriptParser {
public:
    explicit ScriptParser(std::string_view text) : text_(text) {}

    std::vector<MutationOp> parse() {
        std::vector<MutationOp> ops;
        while (true) {
            skip_space();
            if (pos_ == text_.size()) break;
            ops.push_back(parse_op(ops.size() + 1));
        }
        return ops;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(std::size_t index, const std::string& what) const {
        throw ParseError("operator " + std::to_string(index) + ": " + what);
    }

    Symbol symbol(std::size_t index, std::string_view id) const {
        id = trim(id);
        if (!is_valid_symbol(id)) fail(index, "invalid symbol '" + std::string(id) + "'");
        return Symbol(std::string(id));
    }

    std::vector<std::string_view> split_top(std::string_view s) const {
        std::vector<std::string_view> parts;
        int depth = 0;
        std::size_t start = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            char c = s[i];
            if (c == '(' || c == '{') ++depth;
            else if (c == ')' || c == '}') --depth;
            else if (c == ',' && depth == 0) {
                parts.push_back(s.substr(start, i - start));
                start = i + 1;
            }
        }
        parts.push_back(s.substr(start));
        return parts;
    }

    MutationOp parse_op(std::size_t index) {
        if (text_[pos_] != '(') fail(index, "expected '('");
        std::size_t open = pos_++;
        int depth = 1;
        while (pos_ < text_.size() && depth > 0) {
            char c = text_[pos_];
            if (c == '(' || c == '{') ++depth;
            else if (c == ')' || c == '}') --depth;
            ++pos_;
        }
        if (depth != 0) fail(index, "unbalanced parentheses");
        std::string_view args = text_.substr(open + 1, pos_ - open - 2);
        std::size_t mstart = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(') ++pos_;
        std::string_view mnemonic = text_.substr(mstart, pos_ - mstart);

        if (mnemonic == "i_a" || mnemonic == "o_a") {
            auto [from, to] = arc_pair(index, args);
            if (mnemonic == "i_a") return ArcInsert{from, to};
            return ArcOmit{from, to};
        }
        if (mnemonic == "o_n") {
            if (split_top(args).size() != 1) fail(index, "o_n takes one node");
            return NodeOmit{symbol(index, args)};
        }
        if (mnemonic == "i_n") return node_insert(index, args);
        fail(index, "unknown operator '" + std::string(mnemonic) + "'");
    }

    std::pair<Symbol, Symbol> arc_pair(std::size_t index, std::string_view args) const {
        auto parts = split_top(args);
        if (parts.size() == 2) return {symbol(index, parts[0]), symbol(index, parts[1])};
        std::string_view compact = trim(args);
        if (parts.size() == 1 && compact.size() == 2)
            return {symbol(index, compact.substr(0, 1)), symbol(index, compact.substr(1, 1))};
        fail(index, "arc operator takes two nodes, got '" + std::string(args) + "'");
    }

    MutationOp node_insert(std::size_t index, std::string_view args) const {
        auto parts = split_top(args);
        if (parts.size() != 2) fail(index, "i_n takes a node and an arc set");
        NodeInsert op{symbol(index, parts[0]), {}, {}};
        std::string_view set = trim(parts[1]);
        if (set.size() < 2 || set.front() != '{' || set.back() != '}') fail(index, "expected '{...}' arc set");
        set = trim(set.substr(1, set.size() - 2));
        if (!set.empty()) {
            for (auto pair : split_top(set)) {
                pair = trim(pair);
                if (pair.size() < 2 || pair.front() != '(' || pair.back() != ')') fail(index, "expected '(x,y)' arc");
                auto ends = split_top(pair.substr(1, pair.size() - 2));
                if (ends.size() != 2) fail(index, "arc takes two nodes");
                Symbol from = symbol(index, ends[0]);
                Symbol to = symbol(index, ends[1]);
                if (from == op.node && to == op.node) fail(index, "self-loop on inserted node");
                if (from == op.node) op.outgoing.push_back(to);
                else if (to == op.node) op.ingoing.push_back(from);
                else fail(index, "arc (" + from.str() + "," + to.str() + ") does not touch the inserted node");
            }
        }
        try {
            check_well_formed(op);
        } catch (const Error& e) {
            fail(index, e.what());
        }
        return op;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

void check_well_formed(const MutationOp& op) {
    const auto* ins = std::get_if<NodeInsert>(&op);
    if (!ins) {
        if (const auto* a = std::get_if<ArcInsert>(&op); a && a->from == a->to)
            throw Error("self-loop (" + a->from.str() + "," + a->to.str() + ")");
        return;
    }
    for (const auto* group : {&ins->outgoing, &ins->ingoing}) {
        std::set<Symbol> seen;
        for (const auto& s : *group) {
            if (s == ins->node) throw Error("node " + s.str() + " listed as its own neighbour");
            if (!seen.insert(s).second) throw Error("duplicate neighbour " + s.str());
        }
    }
}

std::string format_op(const MutationOp& op) {
    struct Visitor {
        std::string operator()(const ArcInsert& o) const { return arc_args(o.from, o.to) + "i_a"; }
        std::string operator()(const ArcOmit& o) const { return arc_args(o.from, o.to) + "o_a"; }
        std::string operator()(const NodeOmit& o) const { return "(" + o.node.str() + ")o_n"; }
        std::string operator()(const NodeInsert& o) const {
            std::string arcs;
            auto add = [&](const Symbol& from, const Symbol& to) {
                if (!arcs.empty()) arcs += ',';
                arcs += "(" + from.str() + "," + to.str() + ")";
            };
            for (const auto& x : o.outgoing) add(o.node, x);
            for (const auto& y : o.ingoing) add(y, o.node);
            return "(" + o.node.str() + ",{" + arcs + "})i_n";
        }
    };
    return std::visit(Visitor{}, op);
}

std::string format_script(const std::vector<MutationOp>& ops) {
    std::string out;
    for (const auto& op : ops) {
        if (!out.empty()) out += ' ';
        out += format_op(op);
    }
    return out;
}

std::vector<MutationOp> parse_script(std::string_view text) { return ScriptParser(text).parse(); }

} // namespace dgre
