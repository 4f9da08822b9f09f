#pragma once

// The comparison map psi from Deninger points at level m to finite adeles
// modulo p^e m, and the fiber-by-fiber comparison it induces.

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "wittcft/orbitspace.hpp"

namespace wittcft {

/// A residue modulo p^e m' whose p-part vanishes, with the archimedean
/// coordinate carried as an exact positive rational.
struct FiniteAdeleFL {
    i64 prime;
    int p_exponent;     // e
    i64 coprime_level;  // m'
    i64 modulus;        // p^e m'
    i64 residue;
    mpq_class archimedean = 1;

    i64 zero_part() const;                 // p^e
    i64 prime_to_p() const { return nt::mod(residue, coprime_level); }
    friend bool operator==(const FiniteAdeleFL&, const FiniteAdeleFL&) = default;
    std::string to_string() const;
};

/// sigma in (Z/m'Z)^x together with cycl(sigma), identified with sigma itself.
struct CyclCharacter {
    ModUnit sigma;
    ModUnit value() const { return sigma; }
    /// The exponent of zeta^sigma for zeta^j.
    i64 act(i64 j) const { return nt::mul_mod(nt::mod(j, sigma.modulus), sigma.value, sigma.modulus); }
};

/// CRT(0 mod p^e, a n mod m'); throws NotNormalized when p | n.
FiniteAdeleFL psi_level(const DeningerPointFL& x, int p_exponent);

/// The character zeta^j -> zeta^(j a n) of a point on mu_{m'}, as exponents indexed by j.
std::vector<i64> point_character(const DeningerPointFL& x);

bool check_frobenius_equivariance(const DeningerPointFL& x, i64 k);
bool check_galois_equivariance(const DeningerPointFL& x, i64 sigma);

/// A point of the packet side with its flow coordinate, 1 <= r < p.
struct DeningerFlowState {
    DeningerPointFL point;
    mpq_class r;
    friend bool operator==(const DeningerFlowState&, const DeningerFlowState&) = default;
};
/// (a, r) -> (a p^k, r p^-k) normalizes r into [1, p).
DeningerFlowState deninger_flow(const DeningerFlowState& x, const mpq_class& t);
/// (b, s) -> (b p^k, s p^k) normalizes s into (1/p, 1].
FiniteAdeleFL adele_flow(const FiniteAdeleFL& x, const mpq_class& t);
/// Psi(a, r) = (psi(a), r^-1).
FiniteAdeleFL psi_flow(const DeningerFlowState& x, int p_exponent);

/// Psi(flow_t x) == flow_{1/t} Psi(x); throws InvalidArgument for t <= 0.
bool check_anti_equivariance(const DeningerPointFL& x, const mpq_class& t, const mpq_class& r = 1);

struct NamedCheck {
    std::string name;
    bool ok;
    friend bool operator==(const NamedCheck&, const NamedCheck&) = default;
};

struct BridgeReport {
    std::string field_label;
    i64 prime;
    i64 level;       // m
    i64 conductor;
    int p_exponent;  // e
    std::size_t galois_order;
    FiberDecomposition deninger_side;  // pushed into Gal(F/Q) through chi_F
    FiberDecomposition cc_side;
    std::size_t label_count;
    i64 deninger_monodromy;  // p mod m
    std::size_t pushed_monodromy;
    std::size_t cc_monodromy;
    bool monodromy_match;
    std::vector<NamedCheck> equivariance_checks;
    bool anti_equivariance;
    i64 chi_normalization = 1;

    bool match() const;
};

/// Throws InvalidArgument when m is not a multiple of the conductor or p is not
/// prime, NotCoprime when p | m, and Ramified for p in R_F.
BridgeReport bridge_compare(const AbelianField& f, i64 p, i64 m, int p_exponent = 1);

/// The level-m data reduce to the level-m2 data for m2 | m.
bool check_level_reduction(const AbelianField& f, i64 p, i64 m, i64 m2, int p_exponent = 1);

} // namespace wittcft
