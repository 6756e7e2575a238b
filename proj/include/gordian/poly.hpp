#ifndef GORDIAN_POLY_HPP
#define GORDIAN_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gordian {

// Coefficients are exact and arbitrary-precision; they grow with crossing
// number and native integers are not enough.
using Integer = boost::multiprecision::cpp_int;

/// Polynomial in z with integer coefficients, stored densely in ascending
/// powers with trailing zeros trimmed (canonical form).
///
/// For a knot the Conway polynomial has constant term 1 and only even
/// powers; for a 2-component link only odd powers appear.
class ConwayPolynomial {
public:
    ConwayPolynomial() = default;  // the zero polynomial

    static ConwayPolynomial zero() { return ConwayPolynomial(); }
    static ConwayPolynomial one();
    static ConwayPolynomial z();
    static ConwayPolynomial from_coeffs(std::vector<Integer> coeffs);

    // Parses the compact list form "[1,0,1,0,-2]" (coefficient of z^k at
    // index k). Throws ParseError on malformed input.
    static ConwayPolynomial parse_list(std::string_view text);

    const std::vector<Integer>& coeffs() const { return coeffs_; }

    // Coefficient of z^k; zero beyond the stored degree.
    const Integer& coeff(std::size_t k) const;

    // Degree in z, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.empty(); }

    // Knot-shaped: constant term 1 and all odd coefficients zero.
    bool knot_form() const;

    // Link-shaped (2 components): all even coefficients zero.
    bool even_coeffs_zero() const;

    ConwayPolynomial operator+(const ConwayPolynomial& rhs) const;
    ConwayPolynomial operator-(const ConwayPolynomial& rhs) const;
    ConwayPolynomial operator*(const ConwayPolynomial& rhs) const;
    ConwayPolynomial operator-() const;

    // Multiplication by z^k.
    ConwayPolynomial shifted(std::size_t k) const;

    bool operator==(const ConwayPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const ConwayPolynomial& rhs) const { return !(*this == rhs); }

    // Canonical text form, e.g. "1 + 1*z^2 - 2*z^4": ascending powers,
    // explicit coefficients, zero terms omitted. The zero polynomial
    // prints as "0".
    std::string to_text() const;

    // Compact list form "[1,0,1,0,-2]".
    std::string to_list() const;

private:
    void trim();

    std::vector<Integer> coeffs_;
};

// Coefficient of z^2 of a knot polynomial. Throws ValidationError when the
// input is not knot-shaped (e.g. a link polynomial).
std::int64_t a2(const ConwayPolynomial& p);

/// A Conway class: the vertex [K] of the Gordian graph, i.e. a canonical
/// knot-shaped Conway polynomial. Equality of classes is coefficient-
/// sequence equality.
class ConwayClass {
public:
    explicit ConwayClass(ConwayPolynomial poly);

    // Convenience: the class (1, 0, a2, 0, a4, ...) given even coefficients
    // (a2, a4, ...); the leading 1 is implied.
    static ConwayClass from_even_coeffs(const std::vector<std::int64_t>& even);

    static ConwayClass unknot() { return ConwayClass(ConwayPolynomial::one()); }

    const ConwayPolynomial& poly() const { return poly_; }
    std::int64_t a2() const { return a2_; }

    // Coefficient of z^(2j).
    const Integer& even_coeff(std::size_t j) const { return poly_.coeff(2 * j); }

    bool operator==(const ConwayClass& rhs) const { return poly_ == rhs.poly_; }
    bool operator!=(const ConwayClass& rhs) const { return !(*this == rhs); }

    std::string to_text() const { return poly_.to_text(); }
    std::string to_list() const { return poly_.to_list(); }

private:
    ConwayPolynomial poly_;
    std::int64_t a2_;
};

}  // namespace gordian

#endif  // GORDIAN_POLY_HPP
