#include "gordian/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "gordian/errors.hpp"

namespace gordian {

namespace {
const Integer kZero = 0;
}

ConwayPolynomial ConwayPolynomial::one() {
    ConwayPolynomial p;
    p.coeffs_ = {Integer(1)};
    return p;
}

ConwayPolynomial ConwayPolynomial::z() {
    ConwayPolynomial p;
    p.coeffs_ = {Integer(0), Integer(1)};
    return p;
}

ConwayPolynomial ConwayPolynomial::from_coeffs(std::vector<Integer> coeffs) {
    ConwayPolynomial p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

ConwayPolynomial ConwayPolynomial::parse_list(std::string_view text) {
    // Accepts "[c0,c1,...]" with optional whitespace; "[]" is the zero
    // polynomial.
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '[')
        throw ParseError("class/polynomial list must start with '['");
    ++i;
    std::vector<Integer> coeffs;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip_ws();
            std::size_t start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            std::size_t digits = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                ++i;
                ++digits;
            }
            if (digits == 0)
                throw ParseError("expected integer in coefficient list", 1,
                                 static_cast<int>(start + 1));
            coeffs.emplace_back(std::string(text.substr(start, i - start)));
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ']') {
                ++i;
                break;
            }
            throw ParseError("expected ',' or ']' in coefficient list", 1,
                             static_cast<int>(i + 1));
        }
    }
    skip_ws();
    if (i != text.size())
        throw ParseError("trailing characters after coefficient list", 1,
                         static_cast<int>(i + 1));
    return from_coeffs(std::move(coeffs));
}

const Integer& ConwayPolynomial::coeff(std::size_t k) const {
    if (k >= coeffs_.size()) return kZero;
    return coeffs_[k];
}

bool ConwayPolynomial::knot_form() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    for (std::size_t k = 1; k < coeffs_.size(); k += 2)
        if (coeffs_[k] != 0) return false;
    return true;
}

bool ConwayPolynomial::even_coeffs_zero() const {
    for (std::size_t k = 0; k < coeffs_.size(); k += 2)
        if (coeffs_[k] != 0) return false;
    return true;
}

ConwayPolynomial ConwayPolynomial::operator+(const ConwayPolynomial& rhs) const {
    std::vector<Integer> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeff(k) + rhs.coeff(k);
    return from_coeffs(std::move(out));
}

ConwayPolynomial ConwayPolynomial::operator-(const ConwayPolynomial& rhs) const {
    std::vector<Integer> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeff(k) - rhs.coeff(k);
    return from_coeffs(std::move(out));
}

ConwayPolynomial ConwayPolynomial::operator*(const ConwayPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return zero();
    std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return from_coeffs(std::move(out));
}

ConwayPolynomial ConwayPolynomial::operator-() const {
    std::vector<Integer> out(coeffs_);
    for (auto& c : out) c = -c;
    return from_coeffs(std::move(out));
}

ConwayPolynomial ConwayPolynomial::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : zero();
    std::vector<Integer> out(coeffs_.size() + k, Integer(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
    return from_coeffs(std::move(out));
}

std::string ConwayPolynomial::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Integer& c = coeffs_[k];
        if (c == 0) continue;
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << mag;
        } else {
            out << mag << "*z^" << k;
        }
    }
    return out.str();
}

std::string ConwayPolynomial::to_list() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) out << ",";
        out << coeffs_[k];
    }
    out << "]";
    return out.str();
}

void ConwayPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t a2(const ConwayPolynomial& p) {
    if (!p.knot_form())
        throw ValidationError("a2 is defined for knot polynomials only, got " + p.to_text());
    const Integer& c = p.coeff(2);
    if (c < std::numeric_limits<std::int64_t>::min() ||
        c > std::numeric_limits<std::int64_t>::max())
        throw ValidationError("a2 coefficient out of int64 range");
    return static_cast<std::int64_t>(c);
}

ConwayClass::ConwayClass(ConwayPolynomial poly) : poly_(std::move(poly)) {
    if (!poly_.knot_form())
        throw ValidationError("a Conway class requires a knot polynomial (constant term 1, even powers only), got " +
                              poly_.to_text());
    a2_ = gordian::a2(poly_);
}

ConwayClass ConwayClass::from_even_coeffs(const std::vector<std::int64_t>& even) {
    std::vector<Integer> coeffs;
    coeffs.reserve(2 * even.size() + 1);
    coeffs.emplace_back(1);
    for (std::int64_t c : even) {
        coeffs.emplace_back(0);
        coeffs.emplace_back(c);
    }
    return ConwayClass(ConwayPolynomial::from_coeffs(std::move(coeffs)));
}

}  // namespace gordian
