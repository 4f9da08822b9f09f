#pragma once

// Rational Witt vectors: P(t)/Q(t) with P(0) = Q(0) = 1, where addition is
// the product of power series and multiplication extends
// (1 - at) * (1 - bt) = (1 - abt) biadditively.

#include <cstddef>
#include <string>
#include <vector>

#include "wittcft/polynomial.hpp"

namespace wittcft {

class WittVector {
public:
    /// Validates P(0) = Q(0) = 1 and normalizes (common factors removed where
    /// the coefficient ring has a gcd).
    WittVector(Polynomial num, Polynomial den);
    explicit WittVector(Polynomial num);
    /// The additive identity, the constant series 1.
    static WittVector zero(const RingSpec& spec);

    const RingSpec& spec() const noexcept { return num_.spec(); }
    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }
    bool is_zero() const;
    /// True when every coefficient of the normalized numerator and denominator
    /// lies in the image of Z.
    bool has_rational_integer_coefficients() const;

    /// f == g iff f.num * g.den == g.num * f.den.
    friend bool operator==(const WittVector& f, const WittVector& g);

    /// "1-5t+6t^2", "1/(1-2t)" or "(1+t)/(1-2t)".
    std::string to_string() const;

private:
    struct Raw {};
    WittVector(Polynomial num, Polynomial den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

/// Power sums of inverse roots, ghost_1 .. ghost_N.
struct GhostVector {
    std::vector<RingElement> components;

    std::size_t precision() const noexcept { return components.size(); }
    friend bool operator==(const GhostVector&, const GhostVector&) = default;
};

WittVector witt_add(const WittVector& f, const WittVector& g);
WittVector witt_neg(const WittVector& f);
WittVector witt_sub(const WittVector& f, const WittVector& g);
WittVector witt_mul(const WittVector& f, const WittVector& g);
/// F_n; throws InvalidArgument for n == 0.
WittVector frobenius(std::uint64_t n, const WittVector& f);
WittVector teichmuller(const RingElement& a);
/// f -> -f'(0), the ring map W_rat(R) -> R.
RingElement split_counit(const WittVector& f);
GhostVector ghost(const WittVector& f, std::size_t precision);
/// 2 * (deg num + deg den) + 4.
std::size_t default_ghost_precision(const WittVector& f);

/// prod_{i,j} (1 - a_i b_j t) for p = prod (1 - a_i t), q = prod (1 - b_j t),
/// computed as Res_x(rev p(x), q(t x)).
Polynomial otimes_factor(const Polynomial& p, const Polynomial& q);
/// prod_i (1 - a_i^n t), computed as Res_x(rev p(x), 1 - x^n t).
Polynomial frobenius_factor(std::uint64_t n, const Polynomial& p);

/// Applies a ring map to every coefficient.
WittVector map_coefficients(const WittVector& f, const RingSpec& target);
/// Coefficientwise x -> x^sigma over Cyclotomic(n).
WittVector conjugate(const WittVector& f, i64 sigma);
/// True iff every sigma in (Z/nZ)^x fixes f as a Witt vector.
bool galois_fixed_check(const WittVector& f);

class GroupRingElement {
public:
    struct Term {
        RingElement base;
        long multiplicity;
        friend bool operator==(const Term&, const Term&) = default;
    };

    explicit GroupRingElement(RingSpec spec) : spec_(std::move(spec)) {}
    /// Merges repeated bases, drops zero multiplicities; every base must be a unit.
    GroupRingElement(RingSpec spec, std::vector<Term> terms);

    const RingSpec& spec() const noexcept { return spec_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
        return a.spec_ == b.spec_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    RingSpec spec_;
    std::vector<Term> terms_;  // sorted by base
};

/// sum n_a a -> prod (1 - a t)^(n_a).
WittVector groupring_to_witt(const GroupRingElement& x);
/// Inverse of groupring_to_witt over F_p: finds the inverse roots of the
/// numerator and denominator in F_{p^k} for the least k <= splitting_degree_bound
/// where both split. Throws NotSplit otherwise.
GroupRingElement witt_to_groupring(const WittVector& f, int splitting_degree_bound);

} // namespace wittcft
