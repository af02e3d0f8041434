#include <doctest.h>

#include "dgre/mutation_op.hpp"
#include "dgre/oracle.hpp"
#include "fixtures.hpp"

using namespace dgre;
using fixtures::sym;

TEST_CASE("parse_script: operator notation") {
    auto ops = parse_script("(cd)o_a (df)i_a (n)o_n");
    REQUIRE(ops.size() == 3);
    CHECK(ops[0] == MutationOp{ArcOmit{sym("c"), sym("d")}});
    CHECK(ops[1] == MutationOp{ArcInsert{sym("d"), sym("f")}});
    CHECK(ops[2] == MutationOp{NodeOmit{sym("n")}});

    auto ins = parse_script("(v,{(v,b),(a,v)})i_n");
    REQUIRE(ins.size() == 1);
    CHECK(ins[0] == MutationOp{NodeInsert{sym("v"), {sym("b")}, {sym("a")}}});

    CHECK(parse_script("(v,{})i_n") == std::vector<MutationOp>{NodeInsert{sym("v"), {}, {}}});
    CHECK(parse_script("(start,done)i_a") == std::vector<MutationOp>{ArcInsert{sym("start"), sym("done")}});
    CHECK(parse_script("  \n").empty());
}

TEST_CASE("parse_script: errors") {
    CHECK_THROWS_AS(parse_script("(x y)q_z"), ParseError);
    CHECK_THROWS_AS(parse_script("(abc)o_a"), ParseError);
    CHECK_THROWS_AS(parse_script("(a,b)o_n"), ParseError);
    CHECK_THROWS_AS(parse_script("(a,b"), ParseError);
    CHECK_THROWS_AS(parse_script("cd o_a"), ParseError);
    CHECK_THROWS_AS(parse_script("(v,{(a,b)})i_n"), ParseError);
    CHECK_THROWS_AS(parse_script("(v,{(v,v)})i_n"), ParseError);
    CHECK_THROWS_AS(parse_script("(v,{(v,b),(v,b)})i_n"), ParseError);
    CHECK_THROWS_AS(parse_script("(v,(v,b))i_n"), ParseError);
    try {
        parse_script("(ab)o_a (c)x_y");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("operator 2") != std::string::npos);
    }
}

TEST_CASE("format_op") {
    CHECK(format_op(ArcOmit{sym("c"), sym("d")}) == "(cd)o_a");
    CHECK(format_op(ArcInsert{sym("login"), sym("d")}) == "(login,d)i_a");
    CHECK(format_op(NodeInsert{sym("v"), {sym("b")}, {sym("a")}}) == "(v,{(v,b),(a,v)})i_n");
    CHECK(format_op(NodeInsert{sym("v"), {}, {}}) == "(v,{})i_n");
    CHECK(format_script(parse_script("(cd)o_a (df)i_a (n)o_n")) == "(cd)o_a (df)i_a (n)o_n");
}

TEST_CASE("check_well_formed") {
    CHECK_THROWS_AS(check_well_formed(NodeInsert{sym("v"), {sym("v")}, {}}), Error);
    CHECK_THROWS_AS(check_well_formed(NodeInsert{sym("v"), {}, {sym("a"), sym("a")}}), Error);
    CHECK_NOTHROW(check_well_formed(NodeInsert{sym("v"), {sym("a")}, {sym("a")}}));
}

TEST_CASE("format/parse round-trip over generated scripts") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        oracle::GenConfig cfg{6, 0.5, seed, 6, seed % 3 == 0};
        auto ops = oracle::random_script(cfg, oracle::random_model(cfg));
        CHECK(parse_script(format_script(ops)) == ops);
    }
}
