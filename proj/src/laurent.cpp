#include "wep4/laurent.hpp"

#include "wep4/detail/exact_sum.hpp"
#include "wep4/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace wep4 {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, Complex>> terms)
    : terms_(terms)
{
    drop_zeros();
}

LaurentPoly::LaurentPoly(Terms terms)
    : terms_(std::move(terms))
{
    drop_zeros();
}

LaurentPoly LaurentPoly::monomial(int exponent, Complex coefficient)
{
    return LaurentPoly(Terms{{exponent, coefficient}});
}

Complex LaurentPoly::coefficient(int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Complex{} : it->second;
}

std::optional<int> LaurentPoly::min_exponent() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.begin()->first;
}

std::optional<int> LaurentPoly::max_exponent() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.rbegin()->first;
}

bool LaurentPoly::has_negative_exponents() const
{
    return !terms_.empty() && terms_.begin()->first < 0;
}

Complex LaurentPoly::operator()(Complex w) const
{
    if (w == Complex{} && has_negative_exponents()) {
        throw PunctureError("Laurent polynomial with negative exponents evaluated at w = 0");
    }
    detail::ExactSum re;
    detail::ExactSum im;
    for (const auto& [k, c] : terms_) {
        const Complex t = c * ipow(w, k);
        re.add(t.real());
        im.add(t.imag());
    }
    return {re.value(), im.value()};
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly out = *this;
    for (auto& [k, c] : out.terms_) {
        c = -c;
    }
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs)
{
    for (const auto& [k, c] : rhs.terms_) {
        terms_[k] += c;
    }
    drop_zeros();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs)
{
    for (const auto& [k, c] : rhs.terms_) {
        terms_[k] -= c;
    }
    drop_zeros();
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs)
{
    Terms product;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : rhs.terms_) {
            product[ka + kb] += ca * cb;
        }
    }
    terms_ = std::move(product);
    drop_zeros();
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(Complex s)
{
    for (auto& [k, c] : terms_) {
        c *= s;
    }
    drop_zeros();
    return *this;
}

void LaurentPoly::drop_zeros()
{
    std::erase_if(terms_, [](const auto& kv) { return kv.second == Complex{}; });
}

Complex ipow(Complex w, int k)
{
    if (k < 0) {
        // Invert once, then square up; keeps w^-k and w^k symmetric in rounding.
        w = 1.0 / w;
        k = -k;
    }
    Complex result = 1.0;
    while (k > 0) {
        if (k & 1) {
            result *= w;
        }
        k >>= 1;
        if (k > 0) {
            w *= w;
        }
    }
    return result;
}

LaurentPoly derivative(const LaurentPoly& p)
{
    LaurentPoly::Terms out;
    for (const auto& [k, c] : p.terms()) {
        if (k != 0) {
            const auto s = static_cast<double>(k);
            out[k - 1] = {c.real() * s, c.imag() * s};
        }
    }
    return LaurentPoly(std::move(out));
}

LaurentPoly derivative(const LaurentPoly& p, int order)
{
    LaurentPoly out = p;
    for (int i = 0; i < order; ++i) {
        out = derivative(out);
    }
    return out;
}

LaurentPoly antiderivative(const LaurentPoly& p)
{
    LaurentPoly::Terms out;
    for (const auto& [k, c] : p.terms()) {
        if (k == -1) {
            std::ostringstream msg;
            msg << "antiderivative of w^-1 term (coefficient " << c << ") is logarithmic";
            throw LogarithmicTermError(msg.str());
        }
        const auto d = static_cast<double>(k + 1);
        out[k + 1] = {c.real() / d, c.imag() / d};
    }
    return LaurentPoly(std::move(out));
}

bool coefficients_close(const LaurentPoly& a, const LaurentPoly& b, double max_ulps)
{
    if (a.size() != b.size()) {
        return false;
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) {
            return false;
        }
        const double scale = std::max(std::abs(ia->second), std::abs(ib->second));
        if (std::abs(ia->second - ib->second) > max_ulps * eps * scale) {
            return false;
        }
    }
    return true;
}

double max_abs_coefficient(const LaurentPoly& p)
{
    double m = 0.0;
    for (const auto& [k, c] : p.terms()) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

std::string to_string(const LaurentPoly& p)
{
    if (p.is_zero()) {
        return "{}";
    }
    std::ostringstream os;
    os.precision(17);
    os << '{';
    bool first = true;
    for (const auto& [k, c] : p.terms()) {
        if (!first) {
            os << ", ";
        }
        first = false;
        os << k << ": " << c;
    }
    os << '}';
    return os.str();
}

} // namespace wep4
