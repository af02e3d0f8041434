#include <doctest.h>

#include <set>

#include "dgre/graph.hpp"
#include "dgre/oracle.hpp"
#include "fixtures.hpp"

using namespace dgre;
using fixtures::sym;

TEST_CASE("parse_graph: isolated node is start and finish") {
    Dg g = parse_graph("node a");
    CHECK(g.nodes() == std::set<Symbol>{sym("a")});
    CHECK(g.arcs().empty());
    CHECK(g.is_start(sym("a")));
    CHECK(g.is_finish(sym("a")));
}

TEST_CASE("parse_graph: sample model") {
    Dg g = fixtures::fig1();
    CHECK(g.nodes().size() == 17);
    CHECK(g.arcs().size() == 20);
    CHECK(g.starts() == std::set<Symbol>{sym("a")});
    CHECK(g.finishes() == std::set<Symbol>{sym("q")});
}

TEST_CASE("parse_graph: errors") {
    CHECK_THROWS_AS(parse_graph("arc a a"), ParseError);
    CHECK_THROWS_AS(parse_graph("arc a b\narc a b"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex a"), ParseError);
    CHECK_THROWS_AS(parse_graph("arc a"), ParseError);
    CHECK_THROWS_AS(parse_graph("node a{"), ParseError);
    CHECK_THROWS_AS(parse_graph("node a\nstart b"), ParseError);
    try {
        parse_graph("node a\n# fine\n\nnode b c\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("parse_graph: comments and explicit flags") {
    Dg g = parse_graph("arc a b  # first\narc b c\nstart b\n");
    CHECK(g.starts() == std::set<Symbol>{sym("b")});
    // finish still defaults to out-degree 0
    CHECK(g.finishes() == std::set<Symbol>{sym("c")});
    CHECK(enumerate_paths(g) == SopfRe::compact({"bc"}));
}

TEST_CASE("validate_acyclic") {
    CHECK_FALSE(validate_acyclic(fixtures::fig1()));
    CHECK_FALSE(validate_acyclic(Dg{}));
    auto cycle = validate_acyclic(parse_graph("arc a b\narc b a"));
    REQUIRE(cycle);
    CHECK(*cycle == std::vector<Symbol>{sym("a"), sym("b"), sym("a")});

    auto longer = validate_acyclic(parse_graph("arc x a\narc a b\narc b c\narc c a"));
    REQUIRE(longer);
    CHECK(longer->front() == longer->back());
    CHECK(longer->size() == 4);
}

TEST_CASE("path_exists") {
    Dg g = fixtures::fig1();
    CHECK(path_exists(g, sym("a"), sym("q")));
    CHECK_FALSE(path_exists(g, sym("q"), sym("a")));
    CHECK(path_exists(g, sym("k"), sym("k")));
    CHECK_THROWS_AS(path_exists(g, sym("a"), sym("zz")), GraphError);
}

TEST_CASE("path_exists is reflexive and closed over arcs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Dg g = oracle::random_model({8, 0.35, seed, 0});
        for (const auto& u : g.nodes()) {
            CHECK(path_exists(g, u, u));
            for (const auto& v : g.successors(u)) {
                CHECK(path_exists(g, u, v));
                for (const auto& w : g.nodes())
                    if (path_exists(g, v, w)) CHECK(path_exists(g, u, w));
            }
        }
    }
}

TEST_CASE("enumerate_paths") {
    SopfRe r = enumerate_paths(fixtures::fig1());
    CHECK(r == fixtures::example1());
    for (const auto& t : r.terms()) CHECK((t.size() >= 10 && t.size() <= 12));

    CHECK(enumerate_paths(parse_graph("node a")) == SopfRe::compact({"a"}));
    CHECK(enumerate_paths(parse_graph("arc a b\narc a c")) == SopfRe::compact({"ab", "ac"}));
    CHECK(enumerate_paths(Dg{}).empty());
    CHECK_THROWS_AS(enumerate_paths(parse_graph("arc a b\narc b a")), CycleError);
}

TEST_CASE("enumerate_paths on default-flag graphs yields simple paths along arcs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Dg g = oracle::random_model({9, 0.4, seed, 0});
        SopfRe paths = enumerate_paths(g);
        for (const auto& t : paths.terms()) {
            std::set<Symbol> seen(t.symbols().begin(), t.symbols().end());
            CHECK(seen.size() == t.size());
            CHECK(g.is_start(t.front()));
            CHECK(g.is_finish(t.back()));
            for (std::size_t i = 0; i + 1 < t.size(); ++i) CHECK(g.has_arc(t[i], t[i + 1]));
        }
    }
}

TEST_CASE("apply_dg_op: arc omission on the sample model keeps flags") {
    Dg g = fixtures::fig1();
    Dg h = apply_dg_op(g, ArcOmit{sym("c"), sym("d")});
    CHECK_FALSE(h.has_arc(sym("c"), sym("d")));
    CHECK(h.arcs().size() == 19);
    CHECK(h.starts() == g.starts());
    CHECK(h.finishes() == g.finishes());
}

TEST_CASE("apply_dg_op: arc omission flags stranded endpoints") {
    Dg h = apply_dg_op(parse_graph("arc a b\narc b c"), ArcOmit{sym("b"), sym("c")});
    CHECK(h.arcs() == std::set<Arc>{Arc(sym("a"), sym("b"))});
    CHECK(h.is_start(sym("c")));
    CHECK(h.is_finish(sym("b")));
}

TEST_CASE("apply_dg_op: node omission after (cd)o_a (df)i_a") {
    Dg g = apply_dg_op(fixtures::fig1(), ArcOmit{sym("c"), sym("d")});
    g = apply_dg_op(g, ArcInsert{sym("d"), sym("f")});
    Dg h = apply_dg_op(g, NodeOmit{sym("n")});
    CHECK_FALSE(h.has_node(sym("n")));
    CHECK_FALSE(h.has_arc(sym("k"), sym("n")));
    CHECK(h.arcs().size() == g.arcs().size() - 2);
    CHECK(h.is_start(sym("o")));
    CHECK_FALSE(h.is_finish(sym("k")));
}

TEST_CASE("apply_dg_op: node insertion and errors") {
    Dg g = parse_graph("arc a b");
    Dg h = apply_dg_op(g, NodeInsert{sym("v"), {sym("b")}, {sym("a")}});
    CHECK(h.is_start(sym("v")));
    CHECK(h.is_finish(sym("v")));
    CHECK(h.has_arc(sym("v"), sym("b")));
    CHECK(h.has_arc(sym("a"), sym("v")));

    CHECK_THROWS_AS(apply_dg_op(g, ArcInsert{sym("a"), sym("b")}), GraphError);
    CHECK_THROWS_AS(apply_dg_op(g, ArcInsert{sym("b"), sym("a")}), CycleError);
    CHECK_THROWS_AS(apply_dg_op(g, ArcOmit{sym("b"), sym("a")}), GraphError);
    CHECK_THROWS_AS(apply_dg_op(g, NodeOmit{sym("z")}), GraphError);
    CHECK_THROWS_AS(apply_dg_op(g, NodeInsert{sym("a"), {}, {}}), GraphError);
    CHECK_THROWS_AS(apply_dg_op(g, NodeInsert{sym("v"), {sym("b")}, {sym("b")}}), CycleError);
}

TEST_CASE("render_graph") {
    CHECK(render_graph(parse_graph("node a")) == "node a\nstart a\nfinish a\n");
    CHECK(render_graph(Dg{}).empty());
    Dg g = fixtures::fig1();
    CHECK(parse_graph(render_graph(g)) == g);
}

TEST_CASE("render/parse round-trip keeps mutated flags") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        oracle::GenConfig cfg{7, 0.5, seed, 4};
        Dg g = oracle::random_model(cfg);
        for (const auto& op : oracle::random_script(cfg, g)) {
            g = apply_dg_op(g, op);
            CHECK_FALSE(validate_acyclic(g));
            CHECK(parse_graph(render_graph(g)) == g);
        }
    }
}
