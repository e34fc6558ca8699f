#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qh/sequence.hpp"

namespace qh {

/// Integer-coefficient polynomial, index = degree, trailing zeros trimmed.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

    const std::vector<std::int64_t>& coeffs() const { return c_; }
    std::size_t size() const { return c_.size(); }
    std::int64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

    std::complex<double> eval(std::complex<double> z) const {
        std::complex<double> acc = 0.0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + static_cast<double>(c_[i]);
        return acc;
    }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    std::vector<std::int64_t> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

/// Level-n quadruple (P_n, Q_n, R_n, T_n); at level n each polynomial has
/// exactly 4^n coefficients, all +-1, and P_n carries the first 4^n sequence
/// terms.
struct PolyQuad {
    IntPoly p, q, r, t;
    int level = 0;
};

/// Level 0: (1, 1, 1, 1).
PolyQuad initial_quad();

/// One recursion step level n -> n+1.  Multiplication by z^(s 4^n) is an
/// index shift, so the step is four sign-patterned concatenations; the
/// polynomial matrix is never materialized.
PolyQuad step(const PolyQuad& quad);

/// Iterates `level` steps from level 0; guard level <= 10.
PolyQuad level_quad(int level);

/// Max |(|P|^2+|Q|^2+|R|^2+|T|^2) - 4^(n+1)| over `samples` equispaced
/// points on the unit circle (absolute error; the identity is exact, the
/// error is pure floating evaluation noise).
double norm_identity_max_error(int level, int samples);

/// Coefficients of the column series f_c: entry m is sign_at(4m + c).
std::vector<sign_t> column_series(int c, std::int64_t length);

/// Exact coefficient-wise check of F(z) = M(z) F(z^4) on the first `length`
/// coefficients of every component: a(4i+c) = W4[c][i mod 4] a(i).
struct FunctionalEquationReport {
    std::int64_t length = 0;
    bool ok = true;
    std::int64_t first_mismatch_index = -1;
    int component = -1;
};

FunctionalEquationReport functional_equation_check(std::int64_t length);

}  // namespace qh
