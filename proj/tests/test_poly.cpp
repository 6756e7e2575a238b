#include <doctest.h>

#include "gordian/errors.hpp"
#include "gordian/poly.hpp"

using namespace gordian;

TEST_CASE("polynomial canonical form trims trailing zeros") {
    ConwayPolynomial p = ConwayPolynomial::from_coeffs({Integer(1), Integer(0), Integer(2), Integer(0)});
    CHECK(p.degree() == 2);
    CHECK(p.coeff(2) == 2);
    CHECK(p.coeff(7) == 0);
    CHECK(ConwayPolynomial::from_coeffs({Integer(0), Integer(0)}).is_zero());
}

TEST_CASE("polynomial text form") {
    CHECK(ConwayPolynomial::one().to_text() == "1");
    CHECK(ConwayPolynomial::zero().to_text() == "0");
    CHECK(ConwayPolynomial::z().to_text() == "1*z^1");
    ConwayPolynomial p =
        ConwayPolynomial::from_coeffs({Integer(1), Integer(0), Integer(1), Integer(0), Integer(-2)});
    CHECK(p.to_text() == "1 + 1*z^2 - 2*z^4");
    CHECK(p.to_list() == "[1,0,1,0,-2]");
    ConwayPolynomial q = ConwayPolynomial::from_coeffs({Integer(-1), Integer(0), Integer(3)});
    CHECK(q.to_text() == "-1 + 3*z^2");
}

TEST_CASE("polynomial list form round-trips") {
    for (const char* text : {"[1,0,1]", "[1,0,-3,0,2]", "[]", "[1]", "[0,1]"}) {
        ConwayPolynomial p = ConwayPolynomial::parse_list(text);
        CHECK(ConwayPolynomial::parse_list(p.to_list()) == p);
    }
    CHECK(ConwayPolynomial::parse_list(" [ 1 , 0 , 1 ] ") ==
          ConwayPolynomial::parse_list("[1,0,1]"));
    CHECK_THROWS_AS(ConwayPolynomial::parse_list("1,0,1"), ParseError);
    CHECK_THROWS_AS(ConwayPolynomial::parse_list("[1,,2]"), ParseError);
    CHECK_THROWS_AS(ConwayPolynomial::parse_list("[1,2] junk"), ParseError);
}

TEST_CASE("polynomial arithmetic") {
    ConwayPolynomial z = ConwayPolynomial::z();
    ConwayPolynomial z2 = z * z;
    CHECK(z2.coeff(2) == 1);
    CHECK((ConwayPolynomial::one() + z2).to_text() == "1 + 1*z^2");
    CHECK((z2 - z2).is_zero());
    CHECK(z.shifted(3).degree() == 4);
    ConwayPolynomial trefoil = ConwayPolynomial::parse_list("[1,0,1]");
    ConwayPolynomial square = trefoil * trefoil;
    CHECK(square.to_list() == "[1,0,2,0,1]");
}

TEST_CASE("a2 reads the z^2 coefficient of knot polynomials") {
    CHECK(a2(ConwayPolynomial::one()) == 0);
    CHECK(a2(ConwayPolynomial::parse_list("[1,0,1]")) == 1);
    CHECK(a2(ConwayPolynomial::parse_list("[1,0,3,0,-2]")) == 3);
    // link polynomials are rejected
    CHECK_THROWS_AS(a2(ConwayPolynomial::z()), ValidationError);
    CHECK_THROWS_AS(a2(ConwayPolynomial::zero()), ValidationError);
    CHECK_THROWS_AS(a2(ConwayPolynomial::parse_list("[2,0,1]")), ValidationError);
}

TEST_CASE("Conway classes validate the knot invariants") {
    ConwayClass c = ConwayClass(ConwayPolynomial::parse_list("[1,0,-2]"));
    CHECK(c.a2() == -2);
    CHECK(c.even_coeff(0) == 1);
    CHECK_THROWS_AS(ConwayClass(ConwayPolynomial::z()), ValidationError);
    CHECK_THROWS_AS(ConwayClass(ConwayPolynomial::parse_list("[1,1]")), ValidationError);

    ConwayClass built = ConwayClass::from_even_coeffs({-2});
    CHECK(built == c);
    CHECK(ConwayClass::from_even_coeffs({}) == ConwayClass::unknot());
    CHECK(ConwayClass::from_even_coeffs({0, 1}).to_list() == "[1,0,0,0,1]");
}
