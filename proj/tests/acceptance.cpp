#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "dgre/graph.hpp"
#include "dgre/metrics.hpp"
#include "dgre/model.hpp"
#include "dgre/oracle.hpp"
#include "dgre/sopf.hpp"
#include "dgre/verify.hpp"
#include "fixtures.hpp"

using namespace dgre;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double limit_s; // 0 for no runtime limit
    std::function<Verdict()> check;
};

VerifyReport& trial_corpus() {
    static VerifyReport rep = [] {
        VerifyOptions opts;
        opts.trials = 200;
        opts.seed = 1;
        opts.max_nodes = 10;
        opts.max_script = 6;
        return run_verify(opts);
    }();
    return rep;
}

Verdict example_conversion() {
    SopfRe re = model_from_graph(fixtures::fig1()).re;
    std::set<std::string> got;
    for (const auto& t : re.terms()) got.insert(print_term(t, false));
    std::set<std::string> want{"abdghilmpq", "abdghjklmpq", "abdghjknopq", "acdghilmpq", "acdghjklmpq",
                               "acdghjknopq", "acefghilmpq", "acefghjklmpq", "acefghjknopq"};
    return {got == want, print_sopf(re)};
}

Verdict example_scans() {
    SopfRe r = model_from_graph(fixtures::fig1()).re;
    TermPattern f(Symbol("f")), gh(Symbol("g"), Symbol("h"));
    SopfRe h = ht(pt(r, f), f);
    SopfRe t = tt(pt(r, gh), gh);
    SopfRe jkl = pt(pt(r, TermPattern(Symbol("j"), Symbol("k"))), TermPattern(Symbol("k"), Symbol("l")));
    bool ok = h == SopfRe::compact({"acef"}) && t == SopfRe::compact({"ghilmpq", "ghjklmpq", "ghjknopq"}) &&
              jkl == SopfRe::compact({"abdghjklmpq", "acdghjklmpq", "acefghjklmpq"});
    return {ok, "ht=" + print_sopf(h) + " tt=" + print_sopf(t) + " jkl=" + print_sopf(jkl)};
}

Verdict fig2_script() {
    Dg g = fixtures::fig1();
    auto script = parse_script("(cd)o_a (df)i_a (n)o_n");
    ScriptResult res = apply_script(model_from_graph(g), script);

    oracle::NaiveLang lang = oracle::naive_paths(g);
    Dg companion = g;
    for (const auto& op : script) {
        lang = oracle::ref_apply(lang, op, companion);
        companion = apply_dg_op(companion, op);
    }
    std::set<std::pair<std::string, std::string>> arcs, want;
    for (const auto& a : res.state.dg.arcs()) arcs.emplace(a.from.str(), a.to.str());
    for (const char* a : {"ab", "ac", "bd", "ce", "ef", "fg", "dg", "gh", "hi", "hj", "il", "jk", "kl", "lm", "mp",
                          "op", "pq", "df"})
        want.emplace(std::string(1, a[0]), std::string(1, a[1]));

    bool ok = oracle::equivalent(res.state.re, lang) && res.state.re == fixtures::fig2_expected() &&
              res.state.re.contains(ProductTerm::compact("opq")) && arcs == want && res.state.dg == companion;
    return {ok, print_sopf(res.state.re)};
}

Verdict differential() {
    const auto& rep = trial_corpus();
    Verdict v{rep.passed() == 200, std::to_string(rep.passed()) + "/200 equivalent"};
    if (const auto* f = rep.first_failure()) v.detail += "; seed " + std::to_string(f->seed) + ": " + f->detail;
    return v;
}

Verdict count_formulas() {
    const auto& rep = trial_corpus();
    return {rep.count_checks() > 0 && rep.count_violations() == 0,
            std::to_string(rep.count_checks()) + " arc steps, " + std::to_string(rep.count_violations()) +
                " violations"};
}

Verdict invariants() {
    const auto& rep = trial_corpus();
    return {rep.invariant_violations() == 0, std::to_string(rep.invariant_violations()) + " violations"};
}

Verdict complexity_shape() {
    const std::vector<std::size_t> sizes{8, 16, 32, 64};
    bool ok = true;
    std::string detail;
    for (OpKind k : {OpKind::set_union, OpKind::set_concat, OpKind::pt, OpKind::ht, OpKind::tt, OpKind::arc_insert,
                     OpKind::arc_omit}) {
        TrendReport r = measure_trend(k, sizes);
        ok = ok && r.pass;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s%s %.2f<=%.1f", detail.empty() ? "" : ", ", r.name.c_str(),
                      r.fitted_exponent, r.bound_exponent + kExponentSlack);
        detail += buf;
    }
    return {ok, detail};
}

Verdict round_trip() {
    RoundTripReport rep = run_roundtrip(100, 1, 10);
    return {rep.qualifying == 100 && rep.identity == 100,
            std::to_string(rep.identity) + "/" + std::to_string(rep.qualifying) + " identity after " +
                std::to_string(rep.attempts) + " attempts"};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "example conversion", 1, example_conversion},
        {2, "pattern scans", 1, example_scans},
        {3, "mutation script", 1, fig2_script},
        {4, "differential trials", 30, differential},
        {5, "count formulas", 30, count_formulas},
        {6, "invariants", 30, invariants},
        {7, "complexity shape", 60, complexity_shape},
        {8, "insert/omit round trip", 0, round_trip},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.check();
        } catch (const std::exception& e) {
            v = {false, std::string("error: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && secs >= c.limit_s) {
            v.pass = false;
            v.detail += "; over time limit";
        }
        failed += !v.pass;
        std::printf("criterion %d %-24s %s  (%.3f s)  %s\n", c.id, c.name, v.pass ? "PASS" : "FAIL", secs,
                    v.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
