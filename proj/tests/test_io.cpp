#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypertoric/io.hpp"

using namespace hypertoric;

namespace {

std::string parse_error(const std::string& text, bool quiver)
{
    try {
        if (quiver)
            parse_quiver(text);
        else
            parse_matrix(text);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        return e.what();
    }
    FAIL("no error raised");
    return {};
}

}   // namespace

TEST_CASE("matrix files")
{
    IntMatrix a = parse_matrix("# K_{2,3}\n2 3\n1 0 -1  # first row\n\n0 1 +1\n");
    CHECK(a == IntMatrix{{1, 0, -1}, {0, 1, 1}});
    CHECK(parse_matrix(canonical_text(a)) == a);
    CHECK(canonical_text(a) == "2 3\n1 0 -1\n0 1 1\n");
}

TEST_CASE("quiver files")
{
    Quiver q = parse_quiver("3 3\n0 1\n1 2\n2 0\n");
    CHECK(q.vertices == 3);
    CHECK(q.n() == 3);
    CHECK(q.edges[2] == std::pair<int, int>{2, 0});
    CHECK(canonical_text(parse_quiver(canonical_text(q))) == canonical_text(q));
}

TEST_CASE("diagnostics carry line and column")
{
    CHECK(parse_error("2 2\n1 x\n0 1\n", false).find("line 2, column 3") != std::string::npos);
    CHECK(parse_error("2 2\n1 0\n", false).find("expected 2 rows") != std::string::npos);
    CHECK(parse_error("2 2\n1 0 0\n0 1\n", false).find("line 2") != std::string::npos);
    CHECK(parse_error("", false).find("empty") != std::string::npos);
    CHECK(parse_error("3 1\n0 5\n", true).find("vertex out of range") != std::string::npos);
    CHECK(parse_error("3 1\n0\n", true).find("line 2") != std::string::npos);
}

TEST_CASE("lists")
{
    CHECK(parse_rational_list("-3,2,2,2") == RatVector{-3, 2, 2, 2});
    CHECK(parse_rational_list("1/2, -3/4") == RatVector{Rational(1, 2), Rational(-3, 4)});
    CHECK(parse_int_list("4,-1") == IntVector{4, -1});
    CHECK_THROWS_AS(parse_int_list("1/2"), Error);
    CHECK_THROWS_AS(parse_rational_list("1,,2"), Error);
    CHECK_THROWS_AS(parse_rational_list("1/0"), Error);
}

TEST_CASE("digest is 64-bit FNV-1a")
{
    CHECK(digest("") == "cbf29ce484222325");
    CHECK(digest("a") == "af63dc4c8601ec8c");
    CHECK(digest("foobar") == "85944171f73967e8");
}

TEST_CASE("missing file")
{
    CHECK_THROWS_AS(read_file("/nonexistent/path.mat"), Error);
}
