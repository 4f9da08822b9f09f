#pragma once

// Exact coefficient rings. A RingSpec names the ring; a RingElement is a value
// tagged with its RingSpec, so mixing rings is caught at run time.

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "wittcft/errors.hpp"

namespace wittcft {

using i64 = std::int64_t;

enum class RingKind {
    Integers,
    Rationals,
    ModRing,     // Z/nZ, n >= 2
    PrimeField,  // F_p
    Cyclotomic,  // Z[x]/Phi_n(x)
    // Internal extension points: the fraction field of Cyclotomic(n), used for
    // gcd normalization, and F_{p^k}, used for root finding in group-ring decoding.
    CyclotomicField,
    GaloisField,
};

/// n-th cyclotomic polynomial, constant term first. Memoized and safe to call
/// from several threads.
const std::vector<mpz_class>& cyclotomic_polynomial(i64 n);

class RingSpec {
public:
    static RingSpec integers();
    static RingSpec rationals();
    static RingSpec mod_ring(i64 n);
    static RingSpec prime_field(i64 p);
    static RingSpec cyclotomic(i64 n);
    static RingSpec cyclotomic_field(i64 n);
    static RingSpec galois_field(i64 p, int k);

    RingKind kind() const noexcept { return kind_; }
    /// Modulus of ModRing/PrimeField, characteristic of GaloisField.
    i64 modulus() const noexcept { return param_; }
    /// n for Cyclotomic(n) and CyclotomicField(n).
    i64 level() const noexcept { return param_; }
    /// Length of the coefficient-vector payload (deg Phi_n, or k for F_{p^k}); 0 otherwise.
    std::size_t width() const noexcept { return width_; }
    /// Monic defining polynomial for vector kinds, constant term first.
    const std::vector<mpz_class>& defining_polynomial() const;

    bool uses_vector_payload() const noexcept {
        return kind_ == RingKind::Cyclotomic || kind_ == RingKind::GaloisField;
    }
    bool is_field() const noexcept;
    bool is_domain() const noexcept;
    /// Characteristic, 0 for characteristic zero.
    i64 characteristic() const noexcept;
    /// Integers -> Rationals, Cyclotomic(n) -> CyclotomicField(n); fields map to themselves.
    RingSpec fraction_field() const;

    std::string name() const;

    friend bool operator==(const RingSpec& a, const RingSpec& b) noexcept {
        return a.kind_ == b.kind_ && a.param_ == b.param_ && a.width_ == b.width_;
    }

private:
    RingSpec(RingKind kind, i64 param, std::size_t width,
             std::shared_ptr<const std::vector<mpz_class>> defining)
        : kind_(kind), param_(param), width_(width), defining_(std::move(defining)) {}

    RingKind kind_;
    i64 param_;
    std::size_t width_;
    std::shared_ptr<const std::vector<mpz_class>> defining_;
};

void require_same_spec(const RingSpec& a, const RingSpec& b, const char* where);

class RingElement {
public:
    using Payload = std::variant<mpz_class, mpq_class, std::vector<mpz_class>, std::vector<mpq_class>>;

    /// Image of the integer v under Z -> R.
    RingElement(const RingSpec& spec, long v);
    static RingElement from_integer(const RingSpec& spec, const mpz_class& v);
    /// Image of a rational; in finite rings the denominator must be a unit.
    static RingElement from_rational(const RingSpec& spec, const mpq_class& v);
    /// Coefficient vector in the generator x (any length; reduced on construction).
    static RingElement from_coefficients(const RingSpec& spec, std::vector<mpz_class> coeffs);
    static RingElement from_rational_coefficients(const RingSpec& spec, std::vector<mpq_class> coeffs);
    static RingElement zero(const RingSpec& spec) { return RingElement(spec, 0L); }
    static RingElement one(const RingSpec& spec) { return RingElement(spec, 1L); }
    /// The class of x in a vector-payload ring.
    static RingElement generator(const RingSpec& spec);

    const RingSpec& spec() const noexcept { return spec_; }
    const Payload& payload() const noexcept { return value_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const;
    /// True when the element lies in the image of Z (for Cyclotomic: only a constant term).
    bool is_rational_integer() const;

    RingElement inverse() const;  // throws NotAUnit
    RingElement pow(std::uint64_t e) const;
    /// q with q * divisor == *this; throws when the quotient does not exist in the ring.
    RingElement exact_divide(const RingElement& divisor) const;
    /// Carry the value along the natural map into target (Z -> R, R -> Frac(R),
    /// F_p -> F_{p^k}, or back when the value lies in the subring).
    RingElement map_to(const RingSpec& target) const;

    const mpz_class& integer() const;  // Integers, ModRing, PrimeField
    const mpq_class& rational() const; // Rationals
    const std::vector<mpz_class>& coefficients() const;            // Cyclotomic, GaloisField
    const std::vector<mpq_class>& rational_coefficients() const;   // CyclotomicField

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    RingElement& operator*=(const RingElement& o);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.spec_ == b.spec_ && a.value_ == b.value_;
    }

    /// Total order on payloads, used to sort group-ring terms.
    int compare(const RingElement& o) const;

    /// Compact rendering; vector payloads are written as polynomials in x.
    std::string to_string() const;

private:
    RingElement(RingSpec spec, Payload value) : spec_(std::move(spec)), value_(std::move(value)) {}
    void canonicalize();

    RingSpec spec_;
    Payload value_;
};

/// The Galois automorphism x -> x^sigma of Z[x]/Phi_n; sigma must be a unit mod n.
RingElement cyclotomic_conjugate(const RingElement& a, i64 sigma);

} // namespace wittcft
