#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "wittcft/coeffring.hpp"

namespace wittcft {

/// Univariate polynomial over a RingSpec, constant term first, with no
/// trailing zero coefficients.
class Polynomial {
public:
    explicit Polynomial(RingSpec spec) : spec_(std::move(spec)) {}
    Polynomial(RingSpec spec, std::vector<RingElement> coeffs);

    static Polynomial from_integers(const RingSpec& spec, std::initializer_list<long> coeffs);
    static Polynomial from_integers(const RingSpec& spec, const std::vector<mpz_class>& coeffs);
    static Polynomial constant(const RingElement& c);
    static Polynomial monomial(const RingElement& c, std::size_t k);
    /// The polynomial x, or t, depending on how the caller reads it.
    static Polynomial variable(const RingSpec& spec) { return monomial(RingElement::one(spec), 1); }

    const RingSpec& spec() const noexcept { return spec_; }
    const std::vector<RingElement>& coefficients() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    RingElement coeff(std::size_t i) const;
    const RingElement& leading() const;
    RingElement constant_term() const { return coeff(0); }

    RingElement evaluate(const RingElement& x) const;
    Polynomial derivative() const;
    /// x^d p(1/x); requires d >= degree().
    Polynomial reversed(std::size_t d) const;
    Polynomial reversed() const { return reversed(static_cast<std::size_t>(std::max(degree(), 0))); }
    /// p mod x^n.
    Polynomial truncated(std::size_t n) const;
    /// p(c x).
    Polynomial scaled_argument(const RingElement& c) const;
    /// Coefficientwise map along RingElement::map_to.
    Polynomial map_to(const RingSpec& target) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const RingElement& c);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.spec_ == b.spec_ && a.coeffs_ == b.coeffs_;
    }

    /// Rendering such as "1-5t+6t^2"; compound coefficients are parenthesized.
    std::string to_string(std::string_view var = "t") const;

private:
    void trim();

    RingSpec spec_;
    std::vector<RingElement> coeffs_;
};

Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// Euclidean division; the leading coefficient of b must be a unit.
DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Remainder of lc(b)^(deg a - deg b + 1) * a by b, division free.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b);
/// a / b when b divides a exactly (b's leading coefficient need not be a unit
/// in domains); throws otherwise.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

Polynomial make_monic(const Polynomial& f);
/// Monic gcd over a field.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);
/// gcd over Z with positive leading coefficient (primitive PRS, content restored).
Polynomial integer_poly_gcd(const Polynomial& f, const Polynomial& g);

struct ExtendedGcd {
    Polynomial gcd;  // monic
    Polynomial s;
    Polynomial t;    // s*f + t*g == gcd
};
ExtendedGcd ext_gcd(const Polynomial& f, const Polynomial& g);

Polynomial powmod(const Polynomial& base, const mpz_class& exp, const Polynomial& modulus);

/// Res(f, g) = lc(f)^deg g * prod_{f(r)=0} g(r). Subresultant PRS over
/// integral domains, Sylvester determinant otherwise.
RingElement poly_resultant(const Polynomial& f, const Polynomial& g);
RingElement resultant_sylvester(const Polynomial& f, const Polynomial& g);
RingElement resultant_subresultant(const Polynomial& f, const Polynomial& g);

/// Lexicographically first monic irreducible of degree k over F_p, memoized.
const std::vector<mpz_class>& irreducible_polynomial(i64 p, int k);
bool is_irreducible_mod_p(const Polynomial& f);

} // namespace wittcft
