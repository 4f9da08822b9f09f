#pragma once

// Finite-level class field theory over Q. An abelian field is presented by a
// level n and a subgroup H of (Z/nZ)^x; its Galois group is (Z/nZ)^x / H.

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "wittcft/numtheory.hpp"

namespace wittcft {

using i64 = std::int64_t;

/// A residue class coprime to its modulus, 0 <= value < modulus.
struct ModUnit {
    i64 value = 0;
    i64 modulus = 1;

    /// Throws NotCoprime when gcd(value, modulus) != 1.
    static ModUnit make(i64 value, i64 modulus);
    /// Image under (Z/mZ)^x -> (Z/dZ)^x for d | m.
    ModUnit reduce(i64 divisor) const;
    ModUnit operator*(const ModUnit& o) const;

    friend bool operator==(const ModUnit&, const ModUnit&) = default;
    std::string to_string() const;
};

/// (Z/NZ)^x / S as an explicit finite group. Cosets are indexed by their
/// least member in ascending order, so index 0 is always the identity.
class UnitQuotient {
public:
    UnitQuotient(i64 modulus, std::vector<i64> subgroup);
    /// (Z/NZ)^x / <gens>.
    static UnitQuotient generated(i64 modulus, const std::vector<i64>& gens);

    i64 modulus() const noexcept { return modulus_; }
    const std::vector<i64>& subgroup() const noexcept { return subgroup_; }
    std::size_t order() const noexcept { return cosets_.size(); }

    /// Coset index of a unit (reduced mod N); throws NotAUnit.
    std::size_t index_of(i64 unit) const;
    i64 representative(std::size_t index) const { return cosets_.at(index).front(); }
    const std::vector<i64>& coset(std::size_t index) const { return cosets_.at(index); }
    std::size_t identity() const noexcept { return 0; }
    std::size_t multiply(std::size_t a, std::size_t b) const;
    std::size_t power(std::size_t a, std::uint64_t e) const;
    std::size_t inverse(std::size_t a) const;
    std::size_t element_order(std::size_t a) const;

private:
    i64 modulus_;
    std::vector<i64> subgroup_;
    std::vector<std::vector<i64>> cosets_;
    std::vector<long> coset_of_;  // by residue; -1 for non-units
};

/// Units mod n, ascending; unit_group(1) == {0}, the trivial group.
std::vector<i64> unit_group(i64 n);
/// Smallest subgroup of (Z/nZ)^x containing gens, ascending. Throws NotAUnit.
std::vector<i64> subgroup_generated(i64 n, const std::vector<i64>& gens);
/// Every subgroup of (Z/nZ)^x, each ascending, in a deterministic order.
std::vector<std::vector<i64>> all_subgroups(i64 n);

/// Euler criterion; throws InvalidArgument unless p is an odd prime.
int legendre(i64 q, i64 p);
/// Level-m truncation of the linking homomorphism: p mod m.
ModUnit linking_hom(i64 p, i64 m);

struct CrtResult {
    i64 value;
    i64 modulus;
    friend bool operator==(const CrtResult&, const CrtResult&) = default;
};
/// Unique residue modulo the product; throws NotCoprime for non-coprime moduli.
CrtResult crt_combine(const std::vector<std::pair<i64, i64>>& residues);

/// Least u == r (mod c) that is a unit mod n, for c | n and gcd(r, c) = 1.
i64 lift_unit(i64 r, i64 c, i64 n);

class AbelianField {
public:
    /// Validates that subgroup is a subgroup of (Z/level Z)^x.
    AbelianField(i64 level, std::vector<i64> subgroup, std::string label = {});

    static AbelianField rationals();
    static AbelianField cyclotomic(i64 n);
    /// The field fixed by the subgroup generated by gens inside Q(mu_n).
    static AbelianField from_generators(i64 n, const std::vector<i64>& gens);
    /// Q(sqrt q) for an odd prime q, cut out by the quadratic character of its
    /// discriminant.
    static AbelianField quadratic(i64 q);

    i64 level() const noexcept { return level_; }
    const std::vector<i64>& subgroup() const noexcept { return group_->subgroup(); }
    const std::string& label() const noexcept { return label_; }
    i64 conductor() const noexcept { return conductor_; }
    /// [F : Q] = |(Z/nZ)^x / H|.
    std::size_t degree() const noexcept { return group_->order(); }
    const UnitQuotient& galois_group() const noexcept { return *group_; }
    bool contains(i64 unit) const;

    /// The same field presented at level m, a multiple of the conductor.
    AbelianField at_level(i64 m) const;
    AbelianField at_conductor() const { return at_level(conductor_); }

    /// chi_F: the coset in Gal(F/Q) of a unit u mod m, where conductor | m.
    std::size_t restrict_unit(const ModUnit& u) const;

    friend bool operator==(const AbelianField& a, const AbelianField& b) {
        return a.level_ == b.level_ && a.subgroup() == b.subgroup();
    }

private:
    i64 level_;
    std::shared_ptr<const UnitQuotient> group_;
    std::string label_;
    i64 conductor_;
};

/// Minimal c | n with ker((Z/nZ)^x -> (Z/cZ)^x) inside H.
i64 conductor(const AbelianField& f);
/// Prime divisors of the conductor.
std::vector<i64> ramified_set(const AbelianField& f);
/// Primes p | n whose inertia subgroup {u : u == 1 mod n / p^v_p(n)} leaves H.
std::vector<i64> ramified_set_by_inertia(const AbelianField& f);
bool is_ramified(const AbelianField& f, i64 p);

struct ArtinClass {
    std::size_t index;       // coset index in f.galois_group()
    i64 representative;      // least member of the coset
    friend bool operator==(const ArtinClass&, const ArtinClass&) = default;
};
/// The Frobenius coset (p mod n) H; throws Ramified for p in R_F.
ArtinClass artin_symbol(const AbelianField& f, i64 p);

struct SplitData {
    i64 prime;
    ArtinClass artin_class;
    std::vector<i64> artin_coset;
    i64 residue_degree;  // f
    i64 num_primes;      // r
    mpz_class norm;      // p^f
};
SplitData split_invariants(const AbelianField& f, i64 p);

struct FactorDegrees {
    i64 degree;  // f
    i64 count;   // r
    /// Degree/count pairs found by distinct-degree factorization.
    std::vector<std::pair<i64, i64>> profile;
    bool equal_degree() const noexcept { return profile.size() == 1; }
};
/// Distinct-degree factorization of Phi_n over F_p; throws NotCoprime when p | n.
FactorDegrees cyclotomic_factor_degrees(i64 n, i64 p);

} // namespace wittcft
