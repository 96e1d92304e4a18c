#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "gatesim/list_io.hpp"
#include "gatesim/lists.hpp"

using namespace gatesim;

namespace {

ListFamily parse(const std::string& text) {
    std::istringstream in(text);
    return read_lists(in);
}

}  // namespace

TEST_CASE("parses the n=3 adversarial family") {
    const ListFamily family = parse("3\n2,3\n1,3\n1,2\n");
    REQUIRE(family == build_adversarial_lists(3));
}

TEST_CASE("write/read round-trip is the identity") {
    for (const ListFamily& family :
         {build_adversarial_lists(6), build_random_lists(9, 4), build_random_lists(2, 0)}) {
        std::ostringstream out;
        write_lists(family, out);
        REQUIRE(parse(out.str()) == family);
    }
}

TEST_CASE("self-inclusion is reported against the node's file line") {
    try {
        parse("3\n2,3\n2,3\n1,2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(e.line() == 3);
        REQUIRE(std::string(e.what()).find("self-inclusion") != std::string::npos);
    }
}

TEST_CASE("duplicate entries are rejected") {
    REQUIRE_THROWS_AS(parse("3\n2,3\n1,1\n1,2\n"), ParseError);
}

TEST_CASE("malformed integers carry their line number") {
    try {
        parse("3\n2,3\n1,x\n1,2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(e.line() == 3);
    }
}

TEST_CASE("header and structural errors") {
    REQUIRE_THROWS_AS(parse(""), ParseError);
    REQUIRE_THROWS_AS(parse("abc\n"), ParseError);
    REQUIRE_THROWS_AS(parse("1\n\n"), ParseError);          // n < 2
    REQUIRE_THROWS_AS(parse("3\n2,3\n1,3\n"), ParseError);  // missing node 3
    REQUIRE_THROWS_AS(parse("3\n2,3\n1,3,\n1,2\n"), ParseError);  // trailing comma
    REQUIRE_THROWS_AS(parse("3\n2,3\n1\n1,2\n"), ParseError);     // wrong length
}

TEST_CASE("loading a missing file is an I/O error") {
    REQUIRE_THROWS_AS(load_lists("/nonexistent/dir/lists.txt"), IoError);
}

TEST_CASE("whitespace around tokens is tolerated") {
    const ListFamily family = parse("3\n2, 3\n 1,3\n1,2\r\n");
    REQUIRE(family == build_adversarial_lists(3));
}
