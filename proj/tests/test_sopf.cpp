#include <doctest.h>

#include <algorithm>
#include <random>

#include "dgre/sopf.hpp"
#include "fixtures.hpp"

using namespace dgre;
using fixtures::sym;

namespace {

TermPattern pat(const char* s) {
    std::string_view v(s);
    if (v.size() == 1) return TermPattern(Symbol(std::string(v)));
    return TermPattern(Symbol(std::string(v.substr(0, 1))), Symbol(std::string(v.substr(1, 1))));
}

ProductTerm term(const char* s) { return ProductTerm::compact(s); }

ProductTerm reversed(const ProductTerm& t) {
    std::vector<Symbol> s(t.symbols().rbegin(), t.symbols().rend());
    return ProductTerm(std::move(s));
}

// Random terms without repeated symbols over a..h.
SopfRe random_re(std::mt19937_64& rng, std::size_t n) {
    std::vector<ProductTerm> terms;
    std::string alphabet = "abcdefgh";
    for (std::size_t i = 0; i < n; ++i) {
        std::shuffle(alphabet.begin(), alphabet.end(), rng);
        auto len = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        terms.push_back(ProductTerm::compact(alphabet.substr(0, len)));
    }
    return SopfRe(std::move(terms));
}

} // namespace

TEST_CASE("symbols reject reserved characters") {
    CHECK_THROWS_AS(Symbol(""), Error);
    CHECK_THROWS_AS(Symbol("a b"), Error);
    CHECK_THROWS_AS(Symbol("a+b"), Error);
    CHECK_THROWS_AS(Symbol("a.b"), Error);
    CHECK_THROWS_AS(Symbol("EMPTY"), Error);
    CHECK_THROWS_AS(ProductTerm(std::vector<Symbol>{}), Error);
    CHECK(Symbol("login_ok").str() == "login_ok");
}

TEST_CASE("canonical order is length then lexicographic") {
    SopfRe r = SopfRe::compact({"b", "ab", "a", "ba", "c"});
    CHECK(print_sopf(r) == "a + b + c + ab + ba");
}

TEST_CASE("pt") {
    SopfRe r = fixtures::example1();
    CHECK(pt(r, pat("cd")) == SopfRe::compact({"acdghilmpq", "acdghjklmpq", "acdghjknopq"}));
    CHECK(pt(r, pat("q")) == r);
    CHECK(pt(r, TermPattern(sym("zz"))).empty());
}

TEST_CASE("ht") {
    SopfRe r = fixtures::example1();
    CHECK(ht(pt(r, pat("f")), pat("f")) == SopfRe::compact({"acef"}));
    CHECK(ht(SopfRe::compact({"abc"}), pat("a")) == SopfRe::compact({"a"}));
    CHECK(ht(SopfRe::compact({"abdghjklmpq", "acdghjklmpq"}), pat("d")) == SopfRe::compact({"abd", "acd"}));
    CHECK(ht(SopfRe::compact({"abcd"}), pat("bc")) == SopfRe::compact({"abc"}));
    CHECK_THROWS_AS(ht(SopfRe::compact({"abc", "xy"}), pat("a")), Error);
}

TEST_CASE("tt") {
    SopfRe r = fixtures::example1();
    CHECK(tt(pt(r, pat("gh")), pat("gh")) == SopfRe::compact({"ghilmpq", "ghjklmpq", "ghjknopq"}));
    CHECK(tt(SopfRe::compact({"abc"}), pat("c")) == SopfRe::compact({"c"}));
    CHECK(tt(pt(r, pat("j")), pat("j")) == SopfRe::compact({"jklmpq", "jknopq"}));
    CHECK_THROWS_AS(tt(SopfRe::compact({"abc"}), pat("x")), Error);
}

TEST_CASE("first and last occurrence differ on repeated symbols") {
    SopfRe p = SopfRe::compact({"abab"});
    CHECK(ht(p, pat("b")) == SopfRe::compact({"ab"}));
    CHECK(tt(p, pat("a")) == SopfRe::compact({"ab"}));
    CHECK(ht(p, pat("ab")) == SopfRe::compact({"ab"}));
    CHECK(tt(p, pat("ab")) == SopfRe::compact({"ab"}));
}

TEST_CASE("three-symbol selection by chained scans") {
    SopfRe r = fixtures::example1();
    CHECK(pt(pt(r, pat("jk")), pat("kl")) == SopfRe::compact({"abdghjklmpq", "acdghjklmpq", "acefghjklmpq"}));
}

TEST_CASE("set operations") {
    SopfRe x = SopfRe::compact({"ab", "c"});
    CHECK(set_union(SopfRe::compact({"ab"}), SopfRe::compact({"c"})) == x);
    CHECK(set_union(x, SopfRe::compact({"c"})) == x);
    CHECK(set_union(SopfRe{}, x) == x);

    CHECK(set_difference(x, SopfRe::compact({"c"})) == SopfRe::compact({"ab"}));
    CHECK(set_difference(x, SopfRe{}) == x);
    SopfRe r = fixtures::example1();
    CHECK(set_difference(r, pt(r, pat("cd"))) ==
          SopfRe::compact({"abdghilmpq", "abdghjklmpq", "abdghjknopq", "acefghilmpq", "acefghjklmpq", "acefghjknopq"}));

    CHECK(set_concat(SopfRe::compact({"a"}), SopfRe::compact({"c"})) == SopfRe::compact({"ac"}));
    CHECK(set_concat(SopfRe::compact({"ab", "a"}), SopfRe::compact({"c", "bc"})) ==
          SopfRe::compact({"abc", "abbc", "ac"}));
    CHECK(set_concat(SopfRe{}, x).empty());
}

TEST_CASE("add_term and remove_term") {
    CHECK(add_term(SopfRe::compact({"ab"}), term("ab")) == SopfRe::compact({"ab"}));
    CHECK(add_term(SopfRe{}, term("v")) == SopfRe::compact({"v"}));
    CHECK(remove_term(SopfRe::compact({"ab", "v"}), term("v")) == SopfRe::compact({"ab"}));
    CHECK(remove_term(SopfRe::compact({"ab"}), term("v")) == SopfRe::compact({"ab"}));
}

TEST_CASE("print and parse") {
    CHECK(print_sopf(parse_sopf("abdghilmpq + abdghjklmpq")) == "abdghilmpq + abdghjklmpq");
    CHECK(parse_sopf("abdghilmpq + abdghjklmpq") == SopfRe::compact({"abdghilmpq", "abdghjklmpq"}));
    CHECK(parse_sopf("EMPTY").empty());
    CHECK(print_sopf(SopfRe{}) == "EMPTY");
    CHECK(print_sopf(parse_sopf("b + a")) == "a + b");
    CHECK(parse_sopf("ab+c") == SopfRe::compact({"ab", "c"}));

    SopfRe named = parse_sopf("start.login.done + start.done + idle.");
    CHECK(named.size() == 3);
    CHECK(print_sopf(named) == "idle. + start.done + start.login.done");
    CHECK(parse_sopf(print_sopf(named)) == named);
    CHECK(print_sopf(SopfRe::compact({"ab"}), TermStyle::dotted) == "a.b");

    CHECK_THROWS_AS(parse_sopf(""), ParseError);
    CHECK_THROWS_AS(parse_sopf("ab + "), ParseError);
    CHECK_THROWS_AS(parse_sopf("a..b"), ParseError);
    CHECK_THROWS_AS(parse_sopf("a{b"), ParseError);
    CHECK_THROWS_AS(parse_sopf("a b"), ParseError);
}

TEST_CASE("term algebra properties") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        SopfRe a = random_re(rng, 12), b = random_re(rng, 9);
        CHECK(parse_sopf(print_sopf(a)) == a);
        CHECK(parse_sopf(print_sopf(a, TermStyle::dotted)) == a);

        SopfRe u = set_union(a, b);
        CHECK(u.size() <= a.size() + b.size());
        CHECK(std::is_sorted(u.terms().begin(), u.terms().end(),
                             [](const auto& x, const auto& y) { return canonical_less(x, y); }));
        SopfRe ab = set_concat(a, b);
        CHECK(ab.size() <= a.size() * b.size());
        std::vector<ProductTerm> products;
        for (const auto& x : a.terms())
            for (const auto& y : b.terms()) {
                std::vector<Symbol> w(x.symbols().begin(), x.symbols().end());
                w.insert(w.end(), y.symbols().begin(), y.symbols().end());
                products.emplace_back(std::move(w));
            }
        CHECK(ab == SopfRe(std::move(products)));
        CHECK(set_union(set_difference(a, b), b) == u);

        TermPattern s = round % 2 ? pat("c") : pat("cd");
        SopfRe p = pt(a, s);
        for (const auto& t : p.terms()) CHECK(a.contains(t));
        SopfRe heads = ht(p, s);
        for (const auto& h : heads.terms()) CHECK(h.back() == s.symbols().back());

        // reversal swaps head and tail on repeat-free terms
        for (const auto& t : p.terms()) {
            SopfRe single({t});
            SopfRe rev({reversed(t)});
            std::vector<Symbol> rs(s.symbols().rbegin(), s.symbols().rend());
            TermPattern rpat = rs.size() == 1 ? TermPattern(rs[0]) : TermPattern(rs[0], rs[1]);
            SopfRe head = ht(single, s);
            SopfRe tail = tt(rev, rpat);
            REQUIRE(head.size() == 1);
            REQUIRE(tail.size() == 1);
            CHECK(reversed(head.terms()[0]) == tail.terms()[0]);
        }
    }
}
