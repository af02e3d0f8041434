#include "dgre/oracle.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <utility>

namespace dgre::oracle {

namespace {

using ArcPair = std::pair<std::string, std::string>;

// The oracle's own view of a graph: bare node and arc sets.
struct NaiveGraph {
    std::set<std::string> nodes;
    std::set<ArcPair> arcs;

    explicit NaiveGraph(const Dg& g) {
        for (const auto& v : g.nodes()) nodes.insert(v.str());
        for (const auto& a : g.arcs()) arcs.emplace(a.from.str(), a.to.str());
    }

    bool reaches(const std::string& from, const std::string& to) const {
        std::vector<std::string> todo{from};
        std::set<std::string> seen{from};
        while (!todo.empty()) {
            std::string v = todo.back();
            todo.pop_back();
            if (v == to) return true;
            for (const auto& [x, y] : arcs)
                if (x == v && seen.insert(y).second) todo.push_back(y);
        }
        return false;
    }
};

bool has_sub(const Word& w, const Word& s) {
    for (std::size_t i = 0; i + s.size() <= w.size(); ++i) {
        bool hit = true;
        for (std::size_t k = 0; k < s.size(); ++k) hit = hit && w[i + k] == s[k];
        if (hit) return true;
    }
    return false;
}

Word head(const Word& w, const std::string& s) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == s) return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    throw Error("oracle: head of a word without the symbol");
}

Word tail(const Word& w, const std::string& s) {
    for (std::size_t i = w.size(); i-- > 0;)
        if (w[i] == s) return Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    throw Error("oracle: tail of a word without the symbol");
}

// Languages are sets; duplicate words are dropped.
NaiveLang dedup(NaiveLang lang) {
    std::set<Word> seen;
    std::vector<Word> out;
    for (auto& w : lang.words)
        if (seen.insert(w).second) out.push_back(std::move(w));
    return {std::move(out)};
}

bool member(const std::vector<Word>& ws, const Word& w) { return std::find(ws.begin(), ws.end(), w) != ws.end(); }

bool same_words(const std::vector<Word>& x, const std::vector<Word>& y) {
    for (const auto& w : x)
        if (!member(y, w)) return false;
    for (const auto& w : y)
        if (!member(x, w)) return false;
    return true;
}

std::vector<Word> containing(const std::vector<Word>& ws, const Word& s) {
    std::vector<Word> out;
    for (const auto& w : ws)
        if (has_sub(w, s)) out.push_back(w);
    return out;
}

NaiveLang insert_arc(const NaiveLang& lang, NaiveGraph& g, const std::string& i, const std::string& j) {
    if (!g.nodes.contains(i) || !g.nodes.contains(j)) throw Error("oracle: unknown node");
    if (i == j || g.arcs.contains({i, j})) throw Error("oracle: bad arc insertion");
    if (g.reaches(j, i)) throw Error("oracle: cycle");
    NaiveLang out = lang;
    for (const auto& a : containing(lang.words, {i}))
        for (const auto& b : containing(lang.words, {j})) {
            Word w = head(a, i);
            Word t = tail(b, j);
            w.insert(w.end(), t.begin(), t.end());
            out.words.push_back(w);
        }
    g.arcs.emplace(i, j);
    return dedup(std::move(out));
}

NaiveLang omit_arc(const NaiveLang& lang, NaiveGraph& g, const std::string& i, const std::string& j) {
    if (!g.arcs.contains({i, j})) throw Error("oracle: arc does not exist");
    auto a = containing(lang.words, {i});
    auto b = containing(lang.words, {j});
    auto c = containing(lang.words, {i, j});
    NaiveLang out;
    for (const auto& w : lang.words)
        if (!member(c, w)) out.words.push_back(w);
    if (same_words(a, c))
        for (const auto& w : a) out.words.push_back(head(w, i));
    if (same_words(b, c))
        for (const auto& w : b) out.words.push_back(tail(w, j));
    g.arcs.erase({i, j});
    return dedup(std::move(out));
}

NaiveLang without(const NaiveLang& lang, const Word& w) {
    NaiveLang out;
    for (const auto& x : lang.words)
        if (x != w) out.words.push_back(x);
    return out;
}

std::string node_name(std::size_t k) {
    if (k < 26) return std::string(1, static_cast<char>('a' + k));
    return "n" + std::to_string(k);
}

} // namespace

NaiveLang ref_apply(const NaiveLang& lang, const MutationOp& op, const Dg& companion) {
    NaiveGraph g(companion);
    if (const auto* o = std::get_if<ArcInsert>(&op)) return insert_arc(lang, g, o->from.str(), o->to.str());
    if (const auto* o = std::get_if<ArcOmit>(&op)) return omit_arc(lang, g, o->from.str(), o->to.str());
    if (const auto* o = std::get_if<NodeInsert>(&op)) {
        const std::string v = o->node.str();
        if (g.nodes.contains(v)) throw Error("oracle: node exists");
        std::set<std::string> seen_out, seen_in;
        for (const auto& x : o->outgoing)
            if (x.str() == v || !g.nodes.contains(x.str()) || !seen_out.insert(x.str()).second)
                throw Error("oracle: bad neighbour");
        for (const auto& y : o->ingoing)
            if (y.str() == v || !g.nodes.contains(y.str()) || !seen_in.insert(y.str()).second)
                throw Error("oracle: bad neighbour");
        g.nodes.insert(v);
        NaiveLang out = lang;
        out.words.push_back({v});
        for (const auto& x : o->outgoing) out = insert_arc(out, g, v, x.str());
        for (const auto& y : o->ingoing) out = insert_arc(out, g, y.str(), v);
        if (!o->outgoing.empty() || !o->ingoing.empty()) out = without(out, {v});
        return out;
    }
    const auto& o = std::get<NodeOmit>(op);
    const std::string v = o.node.str();
    if (!g.nodes.contains(v)) throw Error("oracle: unknown node");
    std::vector<ArcPair> outgoing, ingoing;
    for (const auto& arc : g.arcs) {
        if (arc.first == v) outgoing.push_back(arc);
        if (arc.second == v) ingoing.push_back(arc);
    }
    NaiveLang out = lang;
    for (const auto& [x, y] : outgoing) out = omit_arc(out, g, x, y);
    for (const auto& [x, y] : ingoing) out = omit_arc(out, g, x, y);
    return without(out, {v});
}

bool equivalent(const SopfRe& a, const NaiveLang& b) {
    std::vector<Word> words;
    for (const auto& t : a.terms()) {
        Word w;
        for (const auto& s : t.symbols()) w.push_back(s.str());
        words.push_back(std::move(w));
    }
    return same_words(words, b.words);
}

NaiveLang naive_paths(const Dg& g) {
    NaiveGraph ng(g);
    NaiveLang out;
    std::vector<Word> stack;
    for (const auto& s : g.starts()) stack.push_back({s.str()});
    while (!stack.empty()) {
        Word w = stack.back();
        stack.pop_back();
        if (g.is_finish(Symbol(w.back()))) out.words.push_back(w);
        if (w.size() > ng.nodes.size()) throw Error("oracle: graph has a cycle");
        for (const auto& [x, y] : ng.arcs) {
            if (x != w.back()) continue;
            Word next = w;
            next.push_back(y);
            stack.push_back(std::move(next));
        }
    }
    return out;
}

CrossCheckReport cross_check_initial(const Dg& g) {
    CrossCheckReport rep;
    NaiveLang naive = naive_paths(g);
    SopfRe fast = enumerate_paths(g);
    std::vector<Word> fast_words;
    for (const auto& t : fast.terms()) {
        Word w;
        for (const auto& s : t.symbols()) w.push_back(s.str());
        fast_words.push_back(std::move(w));
    }
    std::vector<Word> distinct;
    for (const auto& w : naive.words)
        if (!member(distinct, w)) distinct.push_back(w);
    rep.word_count = distinct.size();
    for (const auto& w : distinct)
        if (!member(fast_words, w)) rep.missing.push_back(w);
    for (const auto& w : fast_words)
        if (!member(distinct, w)) rep.extra.push_back(w);
    for (const auto& v : g.nodes()) {
        bool covered = false;
        for (const auto& w : distinct) covered = covered || std::find(w.begin(), w.end(), v.str()) != w.end();
        if (!covered) rep.uncovered_nodes.push_back(v);
    }
    rep.pass = rep.missing.empty() && rep.extra.empty();
    return rep;
}

Dg random_model(const GenConfig& cfg) {
    if (cfg.node_count > kMaxNodes) throw Error("random_model: node_count above " + std::to_string(kMaxNodes));
    if (cfg.arc_density < 0 || cfg.arc_density > 1) throw Error("random_model: arc_density outside [0,1]");
    std::mt19937_64 rng(cfg.seed);
    std::vector<Symbol> order;
    for (std::size_t k = 0; k < cfg.node_count; ++k) order.emplace_back(node_name(k));
    std::shuffle(order.begin(), order.end(), rng);
    Dg g;
    for (const auto& v : order) g.add_node(v);
    std::bernoulli_distribution keep(cfg.arc_density);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (keep(rng)) g.add_arc(Arc(order[i], order[j]));
    g.flag_terminals();
    return g;
}

std::vector<MutationOp> random_script(const GenConfig& cfg, const Dg& g) {
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    auto coin = [&](double p) { return std::bernoulli_distribution(p)(rng); };

    Dg sim = g;
    std::vector<MutationOp> ops;

    auto fresh_name = [&] {
        for (std::size_t k = 0;; ++k)
            if (Symbol s(node_name(k)); !sim.has_node(s)) return s;
    };
    auto insertable = [&] {
        std::vector<Arc> out;
        for (const auto& u : sim.nodes())
            for (const auto& v : sim.nodes())
                if (u != v && !sim.has_arc(u, v) && !path_exists(sim, v, u)) out.emplace_back(u, v);
        return out;
    };

    auto adversarial_op = [&]() -> std::optional<MutationOp> {
        switch (pick(4)) {
        case 0:
            if (!sim.arcs().empty()) {
                auto it = std::next(sim.arcs().begin(), static_cast<std::ptrdiff_t>(pick(sim.arcs().size())));
                return ArcInsert{it->to, it->from};
            }
            break;
        case 1:
            for (const auto& u : sim.nodes())
                for (const auto& v : sim.nodes())
                    if (u != v && !sim.has_arc(u, v)) return ArcOmit{u, v};
            break;
        case 2:
            return NodeOmit{fresh_name()};
        default:
            if (!sim.nodes().empty()) return NodeInsert{*sim.nodes().begin(), {}, {}};
            break;
        }
        return std::nullopt;
    };

    auto valid_op = [&](std::size_t kind) -> std::optional<MutationOp> {
        switch (kind) {
        case 0: {
            auto cand = insertable();
            if (cand.empty()) return std::nullopt;
            const Arc& a = cand[pick(cand.size())];
            return ArcInsert{a.from, a.to};
        }
        case 1: {
            if (sim.arcs().empty()) return std::nullopt;
            auto it = std::next(sim.arcs().begin(), static_cast<std::ptrdiff_t>(pick(sim.arcs().size())));
            return ArcOmit{it->from, it->to};
        }
        case 2: {
            NodeInsert op{fresh_name(), {}, {}};
            for (const auto& x : sim.nodes())
                if (coin(0.3)) op.outgoing.push_back(x);
            for (const auto& y : sim.nodes()) {
                if (std::find(op.outgoing.begin(), op.outgoing.end(), y) != op.outgoing.end()) continue;
                bool closes_cycle = false;
                for (const auto& x : op.outgoing) closes_cycle = closes_cycle || path_exists(sim, x, y);
                if (!closes_cycle && coin(0.3)) op.ingoing.push_back(y);
            }
            std::shuffle(op.outgoing.begin(), op.outgoing.end(), rng);
            std::shuffle(op.ingoing.begin(), op.ingoing.end(), rng);
            return op;
        }
        default: {
            if (sim.nodes().empty()) return std::nullopt;
            return NodeOmit{*std::next(sim.nodes().begin(), static_cast<std::ptrdiff_t>(pick(sim.nodes().size())))};
        }
        }
    };

    while (ops.size() < cfg.script_length) {
        if (cfg.adversarial && coin(0.25)) {
            if (auto op = adversarial_op()) {
                ops.push_back(*op);
                continue;
            }
        }
        std::size_t first = pick(4);
        for (std::size_t k = 0; k < 4; ++k) {
            if (auto op = valid_op((first + k) % 4)) {
                sim = apply_dg_op(sim, *op);
                ops.push_back(std::move(*op));
                break;
            }
        }
    }
    return ops;
}

} // namespace dgre::oracle
