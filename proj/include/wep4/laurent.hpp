#pragma once

#include <complex>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace wep4 {

using Complex = std::complex<double>;

/// Finite Laurent polynomial sum_k c_k w^k with complex double coefficients.
///
/// Terms are kept sparse and canonical: a coefficient that is exactly zero is
/// never stored, so two polynomials compare equal iff their stored terms do.
/// Values are immutable once built; every operation returns a new polynomial.
class LaurentPoly {
public:
    using Terms = std::map<int, Complex>;

    LaurentPoly() = default;
    LaurentPoly(std::initializer_list<std::pair<const int, Complex>> terms);
    explicit LaurentPoly(Terms terms);

    static LaurentPoly monomial(int exponent, Complex coefficient = 1.0);
    static LaurentPoly constant(Complex c) { return monomial(0, c); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Complex coefficient(int exponent) const;

    std::optional<int> min_exponent() const;
    std::optional<int> max_exponent() const;
    bool has_negative_exponents() const;

    /// Evaluates at w. Throws PunctureError at w = 0 when a negative power is present.
    Complex operator()(Complex w) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(Complex s);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend LaurentPoly operator*(LaurentPoly a, Complex s) { return a *= s; }
    friend LaurentPoly operator*(Complex s, LaurentPoly a) { return a *= s; }

    bool operator==(const LaurentPoly&) const = default;

private:
    void drop_zeros();

    Terms terms_;
};

/// Integer power w^k by repeated squaring; negative k inverts first.
Complex ipow(Complex w, int k);

/// Term {k: c} -> {k-1: k c}.
LaurentPoly derivative(const LaurentPoly& p);
LaurentPoly derivative(const LaurentPoly& p, int order);

/// Term {k: c} -> {k+1: c/(k+1)} with zero integration constant.
/// Throws LogarithmicTermError when p has a w^-1 term.
LaurentPoly antiderivative(const LaurentPoly& p);

/// Same support, and every coefficient pair agrees to within max_ulps units
/// in the last place of the larger magnitude.
bool coefficients_close(const LaurentPoly& a, const LaurentPoly& b, double max_ulps = 4.0);

/// Largest coefficient magnitude; 0 for the zero polynomial.
double max_abs_coefficient(const LaurentPoly& p);

std::string to_string(const LaurentPoly& p);

} // namespace wep4
