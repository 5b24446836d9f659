#include <doctest.h>

#include "wsc/linalg.hpp"
#include "wsc/rational.hpp"

using namespace wsc;

TEST_CASE("rational parsing and canonical form") {
    Rational r = rat_parse("6/4");
    CHECK(r.get_num() == 3);
    CHECK(r.get_den() == 2);
    CHECK(rat_str(r) == "3/2");
    CHECK(rat_parse("-2/6") == rat(-1, 3));
    CHECK(rat_parse("7") == 7);
    CHECK(is_integer(rat_parse("7")));
    CHECK(!is_integer(rat_parse("7/2")));

    CHECK_THROWS_AS(rat_parse(""), Error);
    CHECK_THROWS_AS(rat_parse("1/0"), Error);
    CHECK_THROWS_AS(rat_parse("a/b"), Error);
    CHECK_THROWS_AS(rat_parse("1.5"), Error);
}

TEST_CASE("checked integer conversion") {
    CHECK(to_int64(rat(10, 2)) == 5);
    CHECK_THROWS_AS(to_int64(rat(1, 2)), Error);
}

TEST_CASE("rref, rank and kernel") {
    RatMatrix m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(0, 2) = 3;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    m.at(1, 2) = 6;
    CHECK(m.rank() == 1);
    auto kernel = m.kernel_basis();
    REQUIRE(kernel.size() == 2);
    for (const auto& vec : kernel) {
        Rational s = vec[0] + 2 * vec[1] + 3 * vec[2];
        CHECK(s == 0);
    }
}

TEST_CASE("kernel of an invertible matrix is empty") {
    RatMatrix m(2, 2);
    m.at(0, 0) = rat(1, 2);
    m.at(1, 1) = rat(-3, 7);
    CHECK(m.rank() == 2);
    CHECK(m.kernel_basis().empty());
}
