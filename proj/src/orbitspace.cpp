#include "wittcft/orbitspace.hpp"

#include <cmath>
#include <sstream>

namespace wittcft {

double CircleLength::display_value() const {
    return static_cast<double>(exponent) * std::log(static_cast<double>(prime));
}

std::string CircleLength::to_string() const {
    return std::to_string(exponent) + "·log " + std::to_string(prime);
}

MappingTorus::MappingTorus(TorusSide side, std::shared_ptr<const UnitQuotient> group, std::size_t monodromy,
                           i64 base_prime, std::optional<PacketData> packet)
    : side_(side), group_(std::move(group)), monodromy_(monodromy), base_prime_(base_prime),
      packet_(std::move(packet)) {
    if (monodromy_ >= group_->order()) fail(ErrorCode::InvalidArgument, "monodromy is not an element of the group");
}

TorusPoint flow(const MappingTorus& t, const TorusPoint& x, const mpq_class& multiplier) {
    if (multiplier <= 0) fail(ErrorCode::InvalidArgument, "flow multiplier must be positive");
    const UnitQuotient& g = t.group();
    const mpq_class p(static_cast<long>(t.base_prime()));
    const std::size_t back = g.inverse(t.monodromy());
    TorusPoint out{x.element, x.r * multiplier};
    out.r.canonicalize();
    while (out.r >= p) {
        out.r /= p;
        out.element = g.multiply(out.element, t.monodromy());
    }
    while (out.r < 1) {
        out.r *= p;
        out.element = g.multiply(out.element, back);
    }
    return out;
}

FiberDecomposition decompose(const MappingTorus& t) {
    const UnitQuotient& g = t.group();
    std::vector<bool> seen(g.order(), false);
    FiberDecomposition out{{}, 0, 0, t.base_prime()};
    for (std::size_t start = 0; start < g.order(); ++start) {
        if (seen[start]) continue;
        FiberComponent c{start, {}};
        std::size_t x = start;
        do {
            seen[x] = true;
            c.members.push_back(x);
            x = g.multiply(x, t.monodromy());
        } while (x != start);
        out.components.push_back(std::move(c));
    }
    out.covering_degree = static_cast<i64>(out.components.front().size());
    out.count = static_cast<i64>(out.components.size());
    return out;
}

MappingTorus cc_fiber(const AbelianField& f, i64 p) {
    const ArtinClass a = artin_symbol(f, p);
    return {TorusSide::Adelic, std::make_shared<const UnitQuotient>(f.galois_group()), a.index, p};
}

MappingTorus cc_fiber_infinite_level(i64 p, i64 m) {
    const ModUnit lk = linking_hom(p, m);
    auto g = std::make_shared<const UnitQuotient>(UnitQuotient::generated(m, {}));
    const std::size_t mono = g->index_of(lk.value);
    return {TorusSide::AdelicInfiniteLevel, std::move(g), mono, p};
}

MappingTorus deninger_packet(const AbelianField& f, i64 p, i64 m) {
    const SplitData s = split_invariants(f, p);
    const ModUnit lk = linking_hom(p, m);
    const i64 norm_mod_m = nt::pow_mod(p, static_cast<std::uint64_t>(s.residue_degree), m);
    auto g = std::make_shared<const UnitQuotient>(UnitQuotient::generated(m, {norm_mod_m}));
    const std::size_t mono = g->index_of(lk.value);
    return {TorusSide::Packet, std::move(g), mono, p, PacketData{f, m, s.residue_degree}};
}

ClosedOrbitLabel ClosedOrbitLabel::make(i64 unit, i64 prime, i64 level) {
    const ModUnit lk = linking_hom(prime, level);
    const ModUnit a = ModUnit::make(unit, level);
    const UnitQuotient q = UnitQuotient::generated(level, {lk.value});
    return {q.representative(q.index_of(a.value)), prime, level};
}

std::vector<ClosedOrbitLabel> closed_orbit_labels(i64 p, i64 m) {
    const ModUnit lk = linking_hom(p, m);
    const UnitQuotient q = UnitQuotient::generated(m, {lk.value});
    std::vector<ClosedOrbitLabel> out;
    for (std::size_t i = 0; i < q.order(); ++i) out.push_back({q.representative(i), p, m});
    return out;
}

DeningerPointFL make_point(i64 prime, i64 unit, i64 level, const mpz_class& scale, int p_exponent) {
    if (!nt::is_prime(prime)) fail(ErrorCode::InvalidArgument, std::to_string(prime) + " is not prime");
    if (level % prime == 0)
        fail(ErrorCode::NotCoprime, std::to_string(prime) + " divides level " + std::to_string(level));
    if (scale <= 0) fail(ErrorCode::InvalidArgument, "scale must be a positive integer");
    if (p_exponent < 1) fail(ErrorCode::InvalidArgument, "p-exponent must be at least 1");
    return {prime, ModUnit::make(unit, level), scale, p_exponent};
}

DeningerPointFL normalize_point(const DeningerPointFL& x) {
    DeningerPointFL out = x;
    const mpz_class p(static_cast<long>(x.prime));
    const i64 m = x.unit.modulus;
    const i64 p_inv = nt::inverse_mod(x.prime, m).value();
    while (mpz_divisible_p(out.scale.get_mpz_t(), p.get_mpz_t())) {
        out.scale /= p;
        out.unit.value = nt::mul_mod(out.unit.value, p_inv, m);
    }
    return out;
}

bool is_normalized(const DeningerPointFL& x) {
    return !mpz_divisible_ui_p(x.scale.get_mpz_t(), static_cast<unsigned long>(x.prime));
}

bool equivalent_points(const DeningerPointFL& x, const DeningerPointFL& y) {
    if (x.prime != y.prime || x.unit.modulus != y.unit.modulus) return false;
    const DeningerPointFL a = normalize_point(x), b = normalize_point(y);
    return a.unit == b.unit && a.scale == b.scale;
}

std::vector<std::size_t> decomposition_coset_representatives(const AbelianField& f, i64 p, i64 m) {
    const UnitQuotient& gal = f.galois_group();
    // D = <chi_F(lk_p(p))> when chi_F is defined at level m, otherwise the Artin symbol itself.
    const std::size_t frob =
        (m % f.conductor() == 0) ? f.restrict_unit(linking_hom(p, m)) : artin_symbol(f, p).index;
    std::vector<bool> covered(gal.order(), false);
    std::vector<std::size_t> reps;
    for (std::size_t s = 0; s < gal.order(); ++s) {
        if (covered[s]) continue;
        reps.push_back(s);
        std::size_t x = s;
        do {
            covered[x] = true;
            x = gal.multiply(x, frob);
        } while (x != s);
    }
    return reps;
}

std::vector<PacketComponent> packet_fiber_over_label(const MappingTorus& t, const ClosedOrbitLabel& label) {
    if (t.side() != TorusSide::Packet || !t.packet())
        fail(ErrorCode::InvalidArgument, "packet_fiber_over_label needs a packet torus");
    const PacketData& data = *t.packet();
    if (label.level != data.level || label.prime != t.base_prime())
        fail(ErrorCode::InvalidArgument, "label (p=" + std::to_string(label.prime) + ", m=" + std::to_string(label.level) +
                                             ") does not match the packet (p=" + std::to_string(t.base_prime()) +
                                             ", m=" + std::to_string(data.level) + ")");
    const UnitQuotient& big = t.group();
    const UnitQuotient base = UnitQuotient::generated(data.level, {nt::mod(t.base_prime(), data.level)});
    const std::size_t target = base.index_of(label.base_class);

    // Preimage of the label under (Z/m)^x / <p^f> -> (Z/m)^x / <p>, walked in monodromy order.
    std::vector<std::size_t> members;
    const std::size_t start = big.index_of(label.base_class);
    std::size_t x = start;
    do {
        members.push_back(x);
        x = big.multiply(x, t.monodromy());
    } while (x != start);
    std::size_t preimage_size = 0;
    for (std::size_t j = 0; j < big.order(); ++j)
        if (base.index_of(big.representative(j)) == target) ++preimage_size;
    if (preimage_size != members.size())
        fail(ErrorCode::InvalidArgument, "fiber over the label is not a single monodromy orbit");

    std::vector<PacketComponent> out;
    const auto reps = decomposition_coset_representatives(data.field, t.base_prime(), data.level);
    for (std::size_t i = 0; i < reps.size(); ++i)
        out.push_back({i, reps[i], label.base_class, members, CircleLength{t.base_prime(), data.residue_degree}});
    return out;
}

ReciprocityRow reciprocity_row(i64 p, i64 q) {
    for (i64 v : {p, q})
        if (v == 2 || !nt::is_prime(v))
            fail(ErrorCode::InvalidArgument, std::to_string(v) + " is not an odd prime");
    if (p == q) fail(ErrorCode::EqualPrimes, "reciprocity_row needs distinct primes, got " + std::to_string(p) + " twice");
    const AbelianField f = AbelianField::quadratic(q);
    const FiberDecomposition cc = decompose(cc_fiber(f, p));
    const MappingTorus packet = deninger_packet(f, p, f.conductor());
    const auto fiber = packet_fiber_over_label(packet, ClosedOrbitLabel::make(1, p, f.conductor()));
    return {p, q, legendre(q, p), cc.count, static_cast<i64>(fiber.size())};
}

} // namespace wittcft
