#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "sclogic/parser.hpp"
#include "sclogic/semantics.hpp"
#include "sclogic/term.hpp"

using namespace scl;

TEST_CASE("parse basics") {
    CHECK(parse("T").kind() == Term::Kind::ConstT);
    CHECK(parse("F").kind() == Term::Kind::ConstF);
    CHECK(parse("!b && a") == Term::seq_and(Term::negation(Term::atom("b")), Term::atom("a")));
    CHECK(parse("F <| a |> T") ==
          Term::cond(Term::falsity(), Term::atom("a"), Term::truth()));
    CHECK(parse("$x") == Term::var("x"));
    CHECK(parse("foo_1 && bar") == Term::seq_and(Term::atom("foo_1"), Term::atom("bar")));
}

TEST_CASE("parse precedence and associativity") {
    CHECK(parse("a || b && c") ==
          Term::seq_or(Term::atom("a"), Term::seq_and(Term::atom("b"), Term::atom("c"))));
    CHECK(parse("a && b && c") ==
          Term::seq_and(Term::seq_and(Term::atom("a"), Term::atom("b")), Term::atom("c")));
    CHECK(parse("a || b || c") ==
          Term::seq_or(Term::seq_or(Term::atom("a"), Term::atom("b")), Term::atom("c")));
    CHECK(parse("!!a") == Term::negation(Term::negation(Term::atom("a"))));
    CHECK(parse("a && b <| !c |> F") ==
          Term::cond(Term::seq_and(Term::atom("a"), Term::atom("b")),
                     Term::negation(Term::atom("c")), Term::falsity()));
    // The conditional does not nest without parentheses.
    CHECK_THROWS_AS(parse("a <| b |> c <| d |> e"), parse_error);
    CHECK(parse("(a <| b |> c) <| d |> e").kind() == Term::Kind::Cond);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse(""), parse_error);
    CHECK_THROWS_AS(parse("a &&"), parse_error);
    CHECK_THROWS_AS(parse("(a"), parse_error);
    CHECK_THROWS_AS(parse("a b"), parse_error);
    CHECK_THROWS_AS(parse("$T"), parse_error);  // variables are lowercase names
    CHECK_THROWS_AS(parse("Tx"), parse_error);  // not a constant, not an atom
    try {
        parse("a && %");
    } catch (const parse_error& e) {
        CHECK(e.position() == 5);
    }
}

TEST_CASE("render uses minimal parentheses") {
    CHECK(render(Term::negation(Term::atom("a"))) == "!a");
    CHECK(render(parse("(a && b) && c")) == "a && b && c");
    CHECK(render(parse("a && (b && c)")) == "a && (b && c)");
    CHECK(render(parse("(a || b) && c")) == "(a || b) && c");
    CHECK(render(Term::cond(Term::truth(), Term::atom("a"), Term::atom("b"))) ==
          "T <| a |> b");
    CHECK(render(parse("!(a || b)")) == "!(a || b)");
}

TEST_CASE("parse/render round trip on random terms") {
    scltest::TermGen gen(7, {"a", "b", "c"}, {"x", "y"}, true);
    for (int i = 0; i < 500; ++i) {
        Term t = gen(4);
        CHECK(parse(render(t)) == t);
    }
}

TEST_CASE("structured and sexpr exports") {
    Term t = parse("!b && a");
    CHECK(to_structured(t) == "SeqAnd(Not(Atom(b)), Atom(a))");
    CHECK(to_sexpr(t) == "(&& (! b) a)");
    CHECK(to_structured(parse("F <| a |> T")) == "Cond(ConstF, Atom(a), ConstT)");
    CHECK(to_sexpr(parse("$x || T")) == "(|| $x T)");
}

TEST_CASE("signature predicates") {
    CHECK(parse("a && !b").is_scl_pure());
    CHECK_FALSE(parse("a && !b").is_cp_pure());
    CHECK(parse("F <| a |> T").is_cp_pure());
    CHECK_FALSE(parse("F <| a |> T").is_scl_pure());
    CHECK(parse("a").is_cp_pure());
    CHECK(parse("a").is_scl_pure());
    CHECK_FALSE(parse("(a && b) <| c |> F").is_scl_pure());
    CHECK_FALSE(parse("(a && b) <| c |> F").is_cp_pure());
    CHECK(parse("a && T").is_closed());
    CHECK_FALSE(parse("a && $x").is_closed());
}

TEST_CASE("dual") {
    CHECK(dual(Term::seq_and(Term::atom("a"), Term::falsity())) ==
          Term::seq_or(Term::atom("a"), Term::truth()));
    CHECK(dual(Term::atom("a")) == Term::atom("a"));
    Term open = parse("$x || !$y");
    CHECK(dual(dual(open)) == open);
    CHECK_THROWS_AS(dual(parse("a <| b |> c")), error);

    scltest::TermGen gen(11, {"a", "b"}, {"x"});
    for (int i = 0; i < 200; ++i) {
        Term t = gen(4);
        CHECK(dual(dual(t)) == t);
    }
}

TEST_CASE("to_cond translation") {
    CHECK(to_cond(parse("a && b")) ==
          Term::cond(Term::atom("b"), Term::atom("a"), Term::falsity()));
    CHECK(to_cond(parse("!a")) ==
          Term::cond(Term::falsity(), Term::atom("a"), Term::truth()));
    CHECK(to_cond(Term::truth()) == Term::truth());
    CHECK(to_cond(parse("a || b")) ==
          Term::cond(Term::truth(), Term::atom("a"), Term::atom("b")));
    CHECK_THROWS_AS(to_cond(parse("a <| b |> c")), error);
}

TEST_CASE("to_scl translation") {
    CHECK(to_scl(parse("$x <| T |> $y")) == parse("(T && $x) || (!T && $y)"));
    CHECK(to_scl(Term::atom("a")) == Term::atom("a"));
    CHECK(to_scl(to_cond(Term::atom("a"))) == Term::atom("a"));
    CHECK_THROWS_AS(to_scl(parse("!a")), error);
    CHECK_THROWS_AS(to_scl(parse("a && b")), error);
}

TEST_CASE("translations preserve closedness and variable sets") {
    auto var_set = [](const Term& t) {
        std::vector<std::string> v = variable_names(t);
        std::sort(v.begin(), v.end());
        return v;
    };
    scltest::TermGen gen(23, {"a", "b"}, {"x", "y", "z"});
    for (int i = 0; i < 200; ++i) {
        Term t = gen(3);
        Term f = to_cond(t);
        CHECK(f.is_cp_pure());
        CHECK(f.is_closed() == t.is_closed());
        CHECK(var_set(f) == var_set(t));
        Term g = to_scl(f);
        CHECK(g.is_scl_pure());
        CHECK(var_set(g) == var_set(t));
    }
}

TEST_CASE("expand_full_and") {
    Term a = Term::atom("a"), b = Term::atom("b");
    CHECK(expand_full_and(a, b) == parse("(a || (b && F)) && b"));
    CHECK(expand_full_and(Term::truth(), Term::truth()) == parse("(T || (T && F)) && T"));
    CHECK_THROWS_AS(expand_full_and(parse("a <| b |> c"), a), error);
}

TEST_CASE("substitute") {
    std::map<std::string, Term> binding{{"x", Term::atom("a")}};
    CHECK(substitute(parse("$x && F"), binding) == parse("a && F"));
    CHECK(substitute(parse("$x || $y"), {{"x", Term::truth()}, {"y", Term::falsity()}}) ==
          parse("T || F"));
    CHECK(substitute(parse("($x && $y) && $z"),
                     {{"x", Term::atom("a")}, {"y", Term::atom("b")}, {"z", Term::atom("a")}}) ==
          parse("(a && b) && a"));
    CHECK_THROWS_AS(substitute(parse("$x && $y"), binding), error);
    CHECK_THROWS_AS(substitute(parse("$x"), {{"x", parse("$y")}}), error);
}

TEST_CASE("alphabet validation") {
    CHECK_THROWS_AS(Alphabet({}), error);
    CHECK_THROWS_AS(Alphabet({"a", "a"}), error);
    Alphabet ab({"a", "b"});
    CHECK(ab.contains("a"));
    CHECK_FALSE(ab.contains("c"));
}
