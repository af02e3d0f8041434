#include "dgre/verify.hpp"

#include <random>
#include <set>
#include <sstream>

#include "dgre/graph.hpp"
#include "dgre/model.hpp"
#include "dgre/oracle.hpp"

namespace dgre {

namespace {

std::string words_text(const oracle::NaiveLang& lang) {
    std::set<std::string> sorted;
    for (const auto& w : lang.words) {
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "." : "") + w[i];
        sorted.insert(s);
    }
    std::string out;
    for (const auto& s : sorted) out += (out.empty() ? "" : " + ") + s;
    return out.empty() ? "EMPTY" : out;
}

std::size_t invariant_violations(const ModelState& st) {
    std::size_t bad = 0;
    if (validate_acyclic(st.dg)) ++bad;
    for (const auto& t : st.re.terms()) {
        std::set<Symbol> seen;
        for (const auto& s : t.symbols()) {
            if (!seen.insert(s).second) ++bad;
            if (!st.dg.has_node(s)) ++bad;
        }
    }
    if (parse_graph(render_graph(st.dg)) != st.dg) ++bad;
    if (parse_sopf(print_sopf(st.re)) != st.re) ++bad;
    if (parse_sopf(print_sopf(st.re, TermStyle::dotted)) != st.re) ++bad;
    return bad;
}

void check_counts(const LogEntry& entry, TrialOutcome& out) {
    for (const auto& s : entry.arc_steps) {
        ++out.count_checks;
        bool ok = s.kind == ArcStep::Kind::insert
                      ? s.terms_added <= s.heads * s.tails && s.terms_removed == 0
                      : s.terms_removed == s.cut && s.terms_added <= s.heads + s.tails;
        if (!ok) ++out.count_violations;
    }
}

void run_steps(const VerifyOptions& opts, const Dg& g, const std::vector<MutationOp>& script, TrialOutcome& out) {
    ModelState state = model_from_graph(g);
    oracle::NaiveLang lang = oracle::naive_paths(g);
    Dg companion = g;
    if (!oracle::equivalent(state.re, lang)) {
        out.ok = false;
        out.detail = "initial RE differs: " + print_sopf(state.re, TermStyle::dotted) + " vs " + words_text(lang);
        return;
    }
    out.invariant_violations += invariant_violations(state);

    for (std::size_t k = 0; k < script.size(); ++k) {
        const MutationOp& op = script[k];
        ++out.steps;
        auto diverge = [&](const std::string& what) {
            out.ok = false;
            out.divergent_step = k + 1;
            out.detail = format_op(op) + ": " + what;
        };

        std::optional<Applied> applied;
        std::string impl_error, ref_error;
        try {
            applied = apply_op(state, op);
        } catch (const Error& e) {
            impl_error = e.what();
        }
        std::optional<oracle::NaiveLang> next_lang;
        try {
            next_lang = oracle::ref_apply(lang, op, companion);
        } catch (const Error& e) {
            ref_error = e.what();
        }

        if (!applied && !next_lang) {
            ++out.rejected_steps;
            continue;
        }
        if (!applied) return diverge("implementation rejected (" + impl_error + ") but oracle accepted");
        if (!next_lang) return diverge("oracle rejected (" + ref_error + ") but implementation accepted");

        SopfRe re = applied->state.re;
        if (opts.fault_hook) opts.fault_hook(re, k + 1);
        if (!oracle::equivalent(re, *next_lang))
            return diverge("RE " + print_sopf(re, TermStyle::dotted) + " vs oracle " + words_text(*next_lang));
        companion = apply_dg_op(companion, op);
        if (applied->state.dg != companion) return diverge("graph differs from stepwise operator application");

        check_counts(applied->entry, out);
        out.invariant_violations += invariant_violations(applied->state);
        state = std::move(applied->state);
        lang = std::move(*next_lang);
    }
}

} // namespace

std::size_t VerifyReport::passed() const {
    std::size_t n = 0;
    for (const auto& t : trials) n += t.ok;
    return n;
}

std::size_t VerifyReport::count_checks() const {
    std::size_t n = 0;
    for (const auto& t : trials) n += t.count_checks;
    return n;
}

std::size_t VerifyReport::count_violations() const {
    std::size_t n = 0;
    for (const auto& t : trials) n += t.count_violations;
    return n;
}

std::size_t VerifyReport::invariant_violations() const {
    std::size_t n = 0;
    for (const auto& t : trials) n += t.invariant_violations;
    return n;
}

const TrialOutcome* VerifyReport::first_failure() const {
    for (const auto& t : trials)
        if (!t.ok) return &t;
    return nullptr;
}

TrialOutcome run_trial(std::uint64_t seed, const VerifyOptions& opts) {
    TrialOutcome out;
    out.seed = seed;
    try {
        std::mt19937_64 rng(seed);
        oracle::GenConfig cfg;
        cfg.seed = seed;
        cfg.node_count = std::uniform_int_distribution<std::size_t>(0, opts.max_nodes)(rng);
        cfg.arc_density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        cfg.script_length = std::uniform_int_distribution<std::size_t>(0, opts.max_script)(rng);
        cfg.adversarial = std::bernoulli_distribution(0.25)(rng);

        Dg g = oracle::random_model(cfg);
        auto script = oracle::random_script(cfg, g);
        out.graph = render_graph(g);
        out.script = format_script(script);
        if (parse_script(out.script) != script) ++out.invariant_violations;
        run_steps(opts, g, script, out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("unexpected error: ") + e.what();
    }
    if (out.count_violations || out.invariant_violations) {
        if (out.ok) out.detail = "invariant or term-count violation";
        out.ok = false;
    }
    return out;
}

VerifyReport run_verify(const VerifyOptions& opts) {
    VerifyReport rep;
    rep.trials.resize(opts.trials);
    const auto n = static_cast<long long>(opts.trials);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i)
        rep.trials[static_cast<std::size_t>(i)] = run_trial(opts.seed + static_cast<std::uint64_t>(i), opts);
    return rep;
}

VerifyReport run_verify_serial(const VerifyOptions& opts) {
    VerifyReport rep;
    for (std::size_t i = 0; i < opts.trials; ++i) rep.trials.push_back(run_trial(opts.seed + i, opts));
    return rep;
}

RoundTripReport run_roundtrip(std::size_t wanted, std::uint64_t seed, std::size_t max_nodes) {
    RoundTripReport rep;
    const std::size_t cap = wanted * 100 + 100;
    for (std::uint64_t s = seed; rep.qualifying < wanted && rep.attempts < cap; ++s) {
        ++rep.attempts;
        std::mt19937_64 rng(s);
        oracle::GenConfig cfg;
        cfg.seed = s;
        cfg.node_count = std::uniform_int_distribution<std::size_t>(2, std::max<std::size_t>(2, max_nodes))(rng);
        cfg.arc_density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        Dg g = oracle::random_model(cfg);
        ModelState st = model_from_graph(g);

        std::vector<Arc> candidates;
        for (const auto& u : g.nodes())
            for (const auto& v : g.nodes())
                if (u != v && !g.has_arc(u, v) && !path_exists(g, v, u)) candidates.emplace_back(u, v);
        if (candidates.empty()) continue;
        const Arc& arc = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];

        ModelState inserted = arc_insert(st, arc.from, arc.to).state;
        SopfRe a = pt(inserted.re, TermPattern(arc.from));
        SopfRe b = pt(inserted.re, TermPattern(arc.to));
        SopfRe c = pt(inserted.re, TermPattern(arc.from, arc.to));
        if (a == c || b == c) continue;

        ++rep.qualifying;
        if (arc_omit(inserted, arc.from, arc.to).state == st) ++rep.identity;
        else rep.failing_seeds.push_back(s);
    }
    return rep;
}

} // namespace dgre
