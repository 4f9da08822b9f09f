#pragma once

// Finite-level mapping tori G x_{p^Z} R_+ and their closed orbits, on the
// adelic side (Galois groups with the Artin symbol as monodromy) and on the
// packet side ((Z/mZ)^x / <p^f> with monodromy p).

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wittcft/arithmetic.hpp"

namespace wittcft {

/// The exact length f * log p of a closed orbit.
struct CircleLength {
    i64 prime;
    i64 exponent;

    double display_value() const;
    /// "4·log 7".
    std::string to_string() const;
    friend bool operator==(const CircleLength&, const CircleLength&) = default;
};

enum class TorusSide { Adelic, AdelicInfiniteLevel, Packet };

/// Level data carried by tori built from a packet.
struct PacketData {
    AbelianField field;
    i64 level;           // m
    i64 residue_degree;  // f, with N(p) = p^f
};

class MappingTorus {
public:
    MappingTorus(TorusSide side, std::shared_ptr<const UnitQuotient> group, std::size_t monodromy, i64 base_prime,
                 std::optional<PacketData> packet = std::nullopt);

    TorusSide side() const noexcept { return side_; }
    const UnitQuotient& group() const noexcept { return *group_; }
    std::size_t monodromy() const noexcept { return monodromy_; }
    i64 base_prime() const noexcept { return base_prime_; }
    /// log p, the length of the base circle.
    CircleLength base_length() const { return {base_prime_, 1}; }
    std::size_t order() const noexcept { return group_->order(); }
    const std::optional<PacketData>& packet() const noexcept { return packet_; }
    /// False when the model truncates an infinite group, whose flow lines are
    /// not closed (the leaves over p in the maximal abelian case).
    bool closed_orbits() const noexcept { return side_ != TorusSide::AdelicInfiniteLevel; }

private:
    TorusSide side_;
    std::shared_ptr<const UnitQuotient> group_;
    std::size_t monodromy_;
    i64 base_prime_;
    std::optional<PacketData> packet_;
};

/// A point [g, r] of the torus, with r an exact positive rational normalized to 1 <= r < p.
struct TorusPoint {
    std::size_t element;
    mpq_class r;
    friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
};
/// Flow by the multiplier t > 0; each crossing of the base circle in the
/// positive direction multiplies the fiber coordinate by the monodromy.
TorusPoint flow(const MappingTorus& t, const TorusPoint& x, const mpq_class& multiplier);

struct FiberComponent {
    std::size_t representative;           // coset index of the first member
    std::vector<std::size_t> members;     // coset indices, in monodromy order
    std::size_t size() const noexcept { return members.size(); }
};

struct FiberDecomposition {
    std::vector<FiberComponent> components;
    i64 covering_degree;  // f
    i64 count;            // r
    i64 base_prime;
    CircleLength length() const { return {base_prime, covering_degree}; }
};

/// Orbits of <monodromy> acting on the group by multiplication.
FiberDecomposition decompose(const MappingTorus& t);

/// Gal(F/Q) x_{p^Z} R_+ with monodromy the Artin symbol; throws Ramified.
MappingTorus cc_fiber(const AbelianField& f, i64 p);
/// (Z/mZ)^x x_{p^Z} R_+ with monodromy p mod m; throws NotCoprime when p | m.
MappingTorus cc_fiber_infinite_level(i64 p, i64 m);
/// (Z/mZ)^x / <p^f> x_{p^Z} R_+ with monodromy the class of p.
MappingTorus deninger_packet(const AbelianField& f, i64 p, i64 m);

/// A class of (Z/mZ)^x / <p>, stored by its least member.
struct ClosedOrbitLabel {
    i64 base_class;
    i64 prime;
    i64 level;

    static ClosedOrbitLabel make(i64 unit, i64 prime, i64 level);
    friend bool operator==(const ClosedOrbitLabel&, const ClosedOrbitLabel&) = default;
};
/// Every label at level m, ascending.
std::vector<ClosedOrbitLabel> closed_orbit_labels(i64 p, i64 m);

/// The (a, n) datum with (a, n) ~ (p^k a, p^k n).
struct DeningerPointFL {
    i64 prime;
    ModUnit unit;
    mpz_class scale;
    int p_exponent = 1;

    friend bool operator==(const DeningerPointFL&, const DeningerPointFL&) = default;
};
DeningerPointFL make_point(i64 prime, i64 unit, i64 level, const mpz_class& scale, int p_exponent = 1);
/// Removes every factor p from the scale, adjusting the unit by p^-k.
DeningerPointFL normalize_point(const DeningerPointFL& x);
bool is_normalized(const DeningerPointFL& x);
bool equivalent_points(const DeningerPointFL& x, const DeningerPointFL& y);

/// One circle over a label: the orbit {a p^z} in the packet of the i-th prime above p.
struct PacketComponent {
    std::size_t prime_index;      // i, for the prime p_i above p
    std::size_t galois_label;     // coset index s_i in Gal(F/Q) with p_i = p_1^{s_i}
    i64 base_unit;                // a, the least member of the label
    std::vector<std::size_t> members;  // indices in the packet group
    CircleLength length;
    std::size_t size() const noexcept { return members.size(); }
};

/// The r circles over a label. Throws InvalidArgument when the torus is not a
/// packet or when the label's level or prime differ from it.
std::vector<PacketComponent> packet_fiber_over_label(const MappingTorus& t, const ClosedOrbitLabel& label);

/// Coset indices in Gal(F/Q) of representatives of Gal / D, where D is generated
/// by chi_F(p mod m); one per prime of F above p.
std::vector<std::size_t> decomposition_coset_representatives(const AbelianField& f, i64 p, i64 m);

struct ReciprocityRow {
    i64 p;
    i64 q;
    int legendre;
    i64 cc_count;
    i64 deninger_count;
    bool agree() const noexcept {
        const i64 expect = legendre == 1 ? 2 : 1;
        return cc_count == expect && deninger_count == expect;
    }
};
/// Throws EqualPrimes for p == q and InvalidArgument unless both are odd primes.
ReciprocityRow reciprocity_row(i64 p, i64 q);

} // namespace wittcft
