#include "gordian/burau.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <vector>

#include "gordian/errors.hpp"

namespace gordian {

namespace {

// Laurent polynomial in t with exact integer coefficients: coeffs[i] is the
// coefficient of t^(min_exp + i). Kept trimmed at both ends.
struct Laurent {
    int min_exp = 0;
    std::vector<Integer> coeffs;

    static Laurent zero() { return {}; }
    static Laurent constant(long v) {
        Laurent p;
        if (v != 0) p.coeffs = {Integer(v)};
        return p;
    }
    static Laurent monomial(long v, int exp) {
        Laurent p;
        if (v != 0) {
            p.min_exp = exp;
            p.coeffs = {Integer(v)};
        }
        return p;
    }

    bool is_zero() const { return coeffs.empty(); }
    int max_exp() const { return min_exp + static_cast<int>(coeffs.size()) - 1; }

    Integer coeff(int exp) const {
        if (exp < min_exp || exp > max_exp()) return Integer(0);
        return coeffs[static_cast<std::size_t>(exp - min_exp)];
    }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
        std::size_t lead = 0;
        while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
        if (lead) {
            coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
            min_exp += static_cast<int>(lead);
        }
        if (coeffs.empty()) min_exp = 0;
    }

    Integer eval_at_one() const {
        Integer s = 0;
        for (const Integer& c : coeffs) s += c;
        return s;
    }
};

Laurent add(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.min_exp, b.min_exp);
    int hi = std::max(a.max_exp(), b.max_exp());
    Laurent out;
    out.min_exp = lo;
    out.coeffs.assign(static_cast<std::size_t>(hi - lo + 1), Integer(0));
    for (int e = lo; e <= hi; ++e)
        out.coeffs[static_cast<std::size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
    out.trim();
    return out;
}

Laurent sub(const Laurent& a, const Laurent& b) {
    int lo = std::min(a.is_zero() ? b.min_exp : a.min_exp, b.is_zero() ? a.min_exp : b.min_exp);
    int hi = std::max(a.is_zero() ? b.max_exp() : a.max_exp(),
                      b.is_zero() ? a.max_exp() : b.max_exp());
    if (a.is_zero() && b.is_zero()) return Laurent::zero();
    Laurent out;
    out.min_exp = lo;
    out.coeffs.assign(static_cast<std::size_t>(hi - lo + 1), Integer(0));
    for (int e = lo; e <= hi; ++e)
        out.coeffs[static_cast<std::size_t>(e - lo)] = a.coeff(e) - b.coeff(e);
    out.trim();
    return out;
}

Laurent mul(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return Laurent::zero();
    Laurent out;
    out.min_exp = a.min_exp + b.min_exp;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    out.trim();
    return out;
}

// Exact division by a monic ordinary polynomial (min_exp 0, leading
// coefficient 1). Throws InternalError when the division leaves a
// remainder.
Laurent div_exact(const Laurent& a, const Laurent& d) {
    if (a.is_zero()) return Laurent::zero();
    std::vector<Integer> rem = a.coeffs;
    int deg_d = static_cast<int>(d.coeffs.size()) - 1;
    int deg_r = static_cast<int>(rem.size()) - 1;
    if (deg_r < deg_d) throw InternalError("Burau normalization: inexact division");
    std::vector<Integer> quot(static_cast<std::size_t>(deg_r - deg_d + 1), Integer(0));
    for (int k = deg_r - deg_d; k >= 0; --k) {
        Integer c = rem[static_cast<std::size_t>(k + deg_d)];
        if (c == 0) continue;
        quot[static_cast<std::size_t>(k)] = c;
        for (int j = 0; j <= deg_d; ++j)
            rem[static_cast<std::size_t>(k + j)] -= c * d.coeffs[static_cast<std::size_t>(j)];
    }
    for (const Integer& c : rem)
        if (c != 0) throw InternalError("Burau normalization: inexact division");
    Laurent out;
    out.min_exp = a.min_exp - d.min_exp;
    out.coeffs = std::move(quot);
    out.trim();
    return out;
}

using Matrix = std::vector<std::vector<Laurent>>;

Matrix identity(int k) {
    Matrix m(static_cast<std::size_t>(k), std::vector<Laurent>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Laurent::constant(1);
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    std::size_t k = a.size();
    Matrix out(k, std::vector<Laurent>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Laurent acc;
            for (std::size_t l = 0; l < k; ++l) {
                if (a[i][l].is_zero() || b[l][j].is_zero()) continue;
                acc = add(acc, mul(a[i][l], b[l][j]));
            }
            out[i][j] = std::move(acc);
        }
    return out;
}

// Reduced Burau matrix of sigma_i^(+-1) in B_n, size (n-1) x (n-1).
Matrix burau_generator(int n, int letter) {
    int k = n - 1;
    Matrix m = identity(k);
    int i = std::abs(letter);                 // 1-based generator index
    std::size_t r = static_cast<std::size_t>(i - 1);  // 0-based matrix row of the generator
    const Laurent t = Laurent::monomial(1, 1);
    const Laurent tinv = Laurent::monomial(1, -1);
    const Laurent one = Laurent::constant(1);

    if (letter > 0) {
        m[r][r] = Laurent::monomial(-1, 1);  // -t
        if (i > 1) m[r - 1][r] = t;
        if (i < k) m[r + 1][r] = one;
    } else {
        m[r][r] = Laurent::monomial(-1, -1);  // -1/t
        if (i > 1) m[r - 1][r] = one;
        if (i < k) m[r + 1][r] = tinv;
    }
    return m;
}

// Determinant by Laplace expansion with memoization on column subsets;
// matrices here are small (braids with up to ~13 strands).
Laurent determinant(const Matrix& m) {
    std::size_t k = m.size();
    if (k == 0) return Laurent::constant(1);
    std::map<std::uint32_t, Laurent> memo;
    std::function<Laurent(std::uint32_t)> det_cols = [&](std::uint32_t cols) -> Laurent {
        int size = __builtin_popcount(cols);
        if (size == 0) return Laurent::constant(1);
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        std::size_t row = static_cast<std::size_t>(size - 1);
        Laurent acc;
        int pos = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (!(cols & (1u << j))) continue;
            if (!m[row][j].is_zero()) {
                Laurent term = mul(m[row][j], det_cols(cols & ~(1u << j)));
                bool negate = ((static_cast<int>(row) + pos) % 2) != 0;
                acc = negate ? sub(acc, term) : add(acc, term);
            }
            ++pos;
        }
        memo[cols] = acc;
        return acc;
    };
    return det_cols((1u << k) - 1u);
}

}  // namespace

ConwayPolynomial conway_via_matrix(const BraidWord& w) {
    if (w.closure_components() != 1)
        throw ValidationError("matrix oracle requires a braid whose closure is a knot (closure has " +
                              std::to_string(w.closure_components()) + " components)");
    int n = w.strands();
    if (n == 1) return ConwayPolynomial::one();
    if (n > 16) throw ResourceLimitError("matrix oracle supports at most 16 strands");

    Matrix m = identity(n - 1);
    for (int letter : w.letters()) m = matmul(m, burau_generator(n, letter));

    // det(rho(beta) - I) = +- t^a (1 + t + ... + t^(n-1)) * Alexander(t)
    Matrix diff = m;
    for (std::size_t i = 0; i < diff.size(); ++i)
        diff[i][i] = sub(diff[i][i], Laurent::constant(1));
    Laurent p = determinant(diff);
    if (p.is_zero()) throw InternalError("Burau determinant vanished for a knot closure");

    Laurent denom;
    denom.min_exp = 0;
    denom.coeffs.assign(static_cast<std::size_t>(n), Integer(1));
    Laurent q = div_exact(p, denom);

    // Symmetrize: Alexander(t) = +- t^s q(t) with Alexander(t) = Alexander(1/t).
    int span = q.min_exp + q.max_exp();
    if (span % 2 != 0)
        throw InternalError("Burau normalization: asymmetric degree span");
    Laurent alex = q;
    alex.min_exp -= span / 2;
    for (int e = 1; e <= alex.max_exp(); ++e)
        if (alex.coeff(e) != alex.coeff(-e))
            throw InternalError("Burau normalization: polynomial is not palindromic");

    Integer at_one = alex.eval_at_one();
    if (at_one == -1) {
        for (Integer& c : alex.coeffs) c = -c;
    } else if (at_one != 1) {
        throw InternalError("Burau normalization: Alexander(1) != +-1 for a knot");
    }

    // Peel into Conway form via z^2 = t - 2 + 1/t.
    Laurent y;  // t - 2 + 1/t
    y.min_exp = -1;
    y.coeffs = {Integer(1), Integer(-2), Integer(1)};
    int top = alex.max_exp();
    std::vector<Laurent> ypow(static_cast<std::size_t>(top + 1));
    ypow[0] = Laurent::constant(1);
    for (int kk = 1; kk <= top; ++kk) ypow[static_cast<std::size_t>(kk)] = mul(ypow[static_cast<std::size_t>(kk - 1)], y);

    std::vector<Integer> conway(static_cast<std::size_t>(2 * top + 1), Integer(0));
    Laurent rem = alex;
    for (int kk = top; kk >= 1; --kk) {
        Integer c = rem.coeff(kk);
        if (c == 0) continue;
        conway[static_cast<std::size_t>(2 * kk)] = c;
        Laurent scaled = ypow[static_cast<std::size_t>(kk)];
        for (Integer& cc : scaled.coeffs) cc *= c;
        rem = sub(rem, scaled);
        if (rem.max_exp() >= kk && rem.coeff(kk) != 0)
            throw InternalError("Burau normalization: peeling failed");
    }
    if (!rem.is_zero() && (rem.min_exp != 0 || rem.coeffs.size() != 1))
        throw InternalError("Burau normalization: nonconstant remainder");
    conway[0] = rem.is_zero() ? Integer(0) : rem.coeffs[0];
    if (conway[0] != 1)
        throw InternalError("Burau normalization: constant term " + conway[0].str() +
                            ", expected 1 for a knot");

    return ConwayPolynomial::from_coeffs(std::move(conway));
}

}  // namespace gordian
