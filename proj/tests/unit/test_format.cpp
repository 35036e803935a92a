#include "biquad/format.hpp"

#include "biquad/catalog.hpp"
#include "biquad/smoothness.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace biquad;

TEST_CASE("presentation files parse") {
    auto pres = parse_presentation(
        "algebra \"quantum-plane\"\n"
        "generators 2\n"
        "parameters q\n"
        "q 1 2 = q\n");
    CHECK(pres.n == 2);
    CHECK(pres.params == std::vector<std::string>{"q"});
    CHECK(pres.q_at(1, 2).equals(Scalar::parameter("q")));
    CHECK(pres.orientation == Orientation::descending);

    // ascending input lands in canonical descending form
    auto sl2 = parse_presentation(
        "generators 3\n"
        "orientation ascending\n"
        "a 1 2 3 = 1\n"
        "a 1 3 1 = -2\n"
        "a 2 3 2 = 2\n");
    CHECK(sl2.orientation == Orientation::descending);
    CHECK(sl2.a_at(1, 2, 3).equals(Scalar(-1)));
    CHECK(sl2.a_at(1, 3, 1).equals(Scalar(2)));

    // comments and blank lines are fine
    auto commented = parse_presentation("# header\ngenerators 2\n\nb 1 2 = -1  # constant\n");
    CHECK(commented.b_at(1, 2).equals(Scalar(-1)));
}

TEST_CASE("presentation files reject malformed input") {
    auto line_of = [](const std::string& text) {
        try {
            parse_presentation(text);
        } catch (const ParseError& e) {
            return e.line;
        } catch (const ValidationError&) {
            return -1;
        }
        return 0;
    };
    CHECK(line_of("generators 2\nq 1 2 = 2\nq 1 2 = 2\n") == 3);  // duplicate entry
    CHECK(line_of("generators 2\nq 2 1 = 2\n") == 2);             // bad index order
    CHECK(line_of("generators 2\nq 1 2 = t\n") == 2);             // undeclared parameter
    CHECK(line_of("generators 2\nq 1 2 = 0\n") == 2);             // zero q
    CHECK(line_of("generators 2\nq 1 2\n") == 2);                 // missing '='
    CHECK(line_of("q 1 2 = 1\n") == 1);                           // relation before generators
    CHECK(line_of("generators 2\nfrobnicate 1\n") == 2);          // unknown key
    CHECK(line_of("generators 2\na 1 2 5 = 1\n") == 2);           // k out of range
    CHECK(line_of("generators 2\nb 1 2 = (q\n") == 2);            // broken expression
    CHECK_THROWS_AS(parse_presentation(""), ParseError);
}

TEST_CASE("emit/parse round-trip over the catalog") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        auto pres = catalog_get(name);
        auto back = parse_presentation(emit_presentation(pres));
        CHECK(presentations_equal(pres, back));
        CHECK(back.name == pres.name);
        CHECK(back.orientation == Orientation::descending);
    }
}

TEST_CASE("emit/parse round-trip on random presentations") {
    for (int t = 0; t < 30; ++t) {
        auto pres = testutil::random_presentation3();
        auto back = parse_presentation(emit_presentation(pres));
        CAPTURE(emit_presentation(pres));
        CHECK(presentations_equal(pres, back));
    }
}

TEST_CASE("word parsing") {
    CHECK(parse_word("x2^2 x1", 3) == Word{2, 2, 1});
    CHECK(parse_word("x1", 3) == Word{1});
    CHECK(parse_word("", 3).empty());
    CHECK(parse_word("x1^0 x2", 3) == Word{2});
    CHECK_THROWS_AS(parse_word("x5", 3), ParseError);
    CHECK_THROWS_AS(parse_word("y1", 3), ParseError);
    CHECK_THROWS_AS(parse_word("x1^", 3), ParseError);
    CHECK_THROWS_AS(parse_word("x0", 3), ParseError);
}
