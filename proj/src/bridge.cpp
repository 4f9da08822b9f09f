#include "wittcft/bridge.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wittcft {

namespace {

constexpr i64 kModulusLimit = i64{1} << 40;

i64 p_power(i64 p, int e) {
    if (e < 1) fail(ErrorCode::InvalidArgument, "p-exponent must be at least 1");
    i64 out = 1;
    for (int i = 0; i < e; ++i) {
        if (out > kModulusLimit / p) fail(ErrorCode::InvalidArgument, "p^e is too large");
        out *= p;
    }
    return out;
}

i64 scale_mod(const mpz_class& n, i64 m) {
    return static_cast<i64>(mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(m)));
}

FiniteAdeleFL with_prime_to_p(const FiniteAdeleFL& x, i64 value) {
    FiniteAdeleFL out = x;
    out.residue = crt_combine({{0, x.zero_part()}, {nt::mod(value, x.coprime_level), x.coprime_level}}).value;
    return out;
}

using Partition = std::set<std::set<std::size_t>>;

Partition partition_of(const FiberDecomposition& d) {
    Partition out;
    for (const auto& c : d.components) out.insert({c.members.begin(), c.members.end()});
    return out;
}

// Everything except the comparison with a lower level.
BridgeReport compare_fibers(const AbelianField& f, i64 p, i64 m, int e) {
    if (!nt::is_prime(p)) fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    if (m < 1) fail(ErrorCode::InvalidArgument, "level must be positive");
    p_power(p, e);
    if (is_ramified(f, p)) (void)artin_symbol(f, p);  // throws Ramified, naming R_F
    if (m % f.conductor() != 0)
        fail(ErrorCode::InvalidArgument, "level " + std::to_string(m) + " is not a multiple of the conductor " +
                                             std::to_string(f.conductor()));
    if (m % p == 0) fail(ErrorCode::NotCoprime, std::to_string(p) + " divides level " + std::to_string(m));

    const UnitQuotient& gal = f.galois_group();
    const MappingTorus cc_torus = cc_fiber(f, p);
    const FiberDecomposition cc = decompose(cc_torus);
    const Partition cc_parts = partition_of(cc);
    const MappingTorus packet = deninger_packet(f, p, m);
    const auto labels = closed_orbit_labels(p, m);

    BridgeReport rep;
    rep.field_label = f.label();
    rep.prime = p;
    rep.level = m;
    rep.conductor = f.conductor();
    rep.p_exponent = e;
    rep.galois_order = gal.order();
    rep.cc_side = cc;
    rep.label_count = labels.size();
    rep.deninger_monodromy = linking_hom(p, m).value;
    rep.pushed_monodromy = f.restrict_unit(linking_hom(p, m));
    rep.cc_monodromy = cc_torus.monodromy();
    rep.monodromy_match = rep.pushed_monodromy == rep.cc_monodromy;

    bool counts = true, sizes = true, partitions = true, injective = true;
    bool psi_zero = true, frob = true, galois = true, anti = true;
    const i64 pe = p_power(p, e);
    const auto units = unit_group(m);

    for (const ClosedOrbitLabel& label : labels) {
        const auto fiber = packet_fiber_over_label(packet, label);
        FiberDecomposition pushed{{}, 0, static_cast<i64>(fiber.size()), p};
        for (const PacketComponent& comp : fiber) {
            FiberComponent image{0, {}};
            for (std::size_t u : comp.members) {
                const i64 unit = packet.group().representative(u);
                image.members.push_back(gal.multiply(comp.galois_label, f.restrict_unit(ModUnit{unit, m})));
                for (const mpz_class& n : {mpz_class(1), mpz_class(p + 1)}) {
                    const DeningerPointFL x = make_point(p, unit, m, n);
                    if (psi_level(x, e).residue % pe != 0) psi_zero = false;
                }
            }
            image.representative = image.members.front();
            if (std::set<std::size_t>(image.members.begin(), image.members.end()).size() != image.members.size())
                injective = false;
            if (static_cast<i64>(image.size()) != cc.covering_degree) sizes = false;
            pushed.components.push_back(std::move(image));
        }
        pushed.covering_degree = fiber.empty() ? 0 : static_cast<i64>(fiber.front().size());
        if (pushed.count != cc.count) counts = false;
        if (partition_of(pushed) != cc_parts) partitions = false;
        if (label.base_class == labels.front().base_class) rep.deninger_side = pushed;

        const DeningerPointFL x = make_point(p, label.base_class, m, 1);
        for (i64 k = 1; k <= 6; ++k)
            if (k % p != 0 && !check_frobenius_equivariance(x, k)) frob = false;
        for (std::size_t i = 0; i < units.size() && i < 6; ++i)
            if (!check_galois_equivariance(x, units[i])) galois = false;
        for (const mpq_class& t : {mpq_class(p), mpq_class(1, p), mpq_class(pe * p), mpq_class(3, 2), mpq_class(2 * p + 1, 5)})
            if (!check_anti_equivariance(x, t, mpq_class(5, 4))) anti = false;
    }

    rep.equivariance_checks = {
        {"component_count", counts},         {"component_size", sizes},
        {"partition", partitions},           {"pushforward_injective", injective},
        {"monodromy", rep.monodromy_match},  {"psi_p_part_zero", psi_zero},
        {"frobenius", frob},                 {"galois", galois},
    };
    rep.anti_equivariance = anti;
    return rep;
}

} // namespace

i64 FiniteAdeleFL::zero_part() const { return p_power(prime, p_exponent); }

std::string FiniteAdeleFL::to_string() const {
    std::ostringstream os;
    os << residue << " mod " << modulus << " (0 mod " << zero_part() << ", " << prime_to_p() << " mod "
       << coprime_level << ")";
    if (archimedean != 1) os << ", r=" << archimedean.get_str();
    return os.str();
}

FiniteAdeleFL psi_level(const DeningerPointFL& x, int p_exponent) {
    if (!is_normalized(x))
        fail(ErrorCode::NotNormalized, "psi needs a normalized point; " + std::to_string(x.prime) + " divides the scale " +
                                           x.scale.get_str());
    const i64 m = x.unit.modulus;
    if (nt::gcd(m, x.prime) != 1)
        fail(ErrorCode::NotCoprime, std::to_string(x.prime) + " divides level " + std::to_string(m));
    const i64 pe = p_power(x.prime, p_exponent);
    if (m > kModulusLimit / pe) fail(ErrorCode::InvalidArgument, "p^e m is too large");
    const i64 exponent = nt::mul_mod(x.unit.value, scale_mod(x.scale, m), m);
    const CrtResult r = crt_combine({{0, pe}, {exponent, m}});
    return {x.prime, p_exponent, m, r.modulus, r.value};
}

std::vector<i64> point_character(const DeningerPointFL& x) {
    const i64 m = x.unit.modulus;
    const i64 exponent = nt::mul_mod(x.unit.value, scale_mod(x.scale, m), m);
    std::vector<i64> out(static_cast<std::size_t>(m));
    for (i64 j = 0; j < m; ++j) out[static_cast<std::size_t>(j)] = nt::mul_mod(j, exponent, m);
    return out;
}

bool check_frobenius_equivariance(const DeningerPointFL& x, i64 k) {
    if (k < 1 || k % x.prime == 0)
        fail(ErrorCode::InvalidArgument, "Frobenius index " + std::to_string(k) + " must be positive and prime to " +
                                             std::to_string(x.prime));
    const DeningerPointFL base = normalize_point(x);
    DeningerPointFL moved = base;
    moved.scale *= k;
    const i64 m = base.unit.modulus;
    const auto before = point_character(base), after = point_character(moved);
    for (i64 j = 0; j < m; ++j)
        if (after[static_cast<std::size_t>(j)] != before[static_cast<std::size_t>(nt::mul_mod(j, k, m))]) return false;
    const FiniteAdeleFL a = psi_level(base, base.p_exponent), b = psi_level(moved, base.p_exponent);
    return b.residue % b.zero_part() == 0 && b.prime_to_p() == nt::mul_mod(nt::mod(k, m), a.prime_to_p(), m);
}

bool check_galois_equivariance(const DeningerPointFL& x, i64 sigma) {
    const DeningerPointFL base = normalize_point(x);
    const i64 m = base.unit.modulus;
    const CyclCharacter c{ModUnit::make(sigma, m)};
    DeningerPointFL moved = base;
    moved.unit = c.sigma * base.unit;
    const auto before = point_character(base), after = point_character(moved);
    for (i64 j = 0; j < m; ++j)
        if (after[static_cast<std::size_t>(j)] != c.act(before[static_cast<std::size_t>(j)])) return false;
    const FiniteAdeleFL a = psi_level(base, base.p_exponent), b = psi_level(moved, base.p_exponent);
    return b.residue % b.zero_part() == 0 && b.prime_to_p() == c.act(a.prime_to_p());
}

DeningerFlowState deninger_flow(const DeningerFlowState& x, const mpq_class& t) {
    if (t <= 0) fail(ErrorCode::InvalidArgument, "flow increment must be positive");
    const i64 m = x.point.unit.modulus;
    const mpq_class p(static_cast<long>(x.point.prime));
    const i64 p_inv = nt::inverse_mod(x.point.prime, m).value();
    DeningerFlowState out{x.point, x.r * t};
    out.r.canonicalize();
    while (out.r >= p) {
        out.r /= p;
        out.point.unit.value = nt::mul_mod(out.point.unit.value, nt::mod(x.point.prime, m), m);
    }
    while (out.r < 1) {
        out.r *= p;
        out.point.unit.value = nt::mul_mod(out.point.unit.value, p_inv, m);
    }
    return out;
}

FiniteAdeleFL adele_flow(const FiniteAdeleFL& x, const mpq_class& t) {
    if (t <= 0) fail(ErrorCode::InvalidArgument, "flow increment must be positive");
    const i64 m = x.coprime_level;
    const mpq_class p(static_cast<long>(x.prime));
    const i64 p_inv = nt::inverse_mod(x.prime, m).value();
    i64 b = x.prime_to_p();
    mpq_class s = x.archimedean * t;
    s.canonicalize();
    while (s > 1) {
        s /= p;
        b = nt::mul_mod(b, p_inv, m);
    }
    while (s * p <= 1) {
        s *= p;
        b = nt::mul_mod(b, nt::mod(x.prime, m), m);
    }
    FiniteAdeleFL out = with_prime_to_p(x, b);
    out.archimedean = s;
    return out;
}

FiniteAdeleFL psi_flow(const DeningerFlowState& x, int p_exponent) {
    FiniteAdeleFL out = psi_level(x.point, p_exponent);
    out.archimedean = 1 / x.r;
    return out;
}

bool check_anti_equivariance(const DeningerPointFL& x, const mpq_class& t, const mpq_class& r) {
    if (t <= 0) fail(ErrorCode::InvalidArgument, "flow increment must be positive");
    if (r <= 0) fail(ErrorCode::InvalidArgument, "flow coordinate must be positive");
    const DeningerFlowState start = deninger_flow({normalize_point(x), r}, 1);
    const int e = x.p_exponent;
    const FiniteAdeleFL lhs = psi_flow(deninger_flow(start, t), e);
    const FiniteAdeleFL rhs = adele_flow(psi_flow(start, e), 1 / t);
    return lhs == rhs && lhs.residue % lhs.zero_part() == 0;
}

bool BridgeReport::match() const {
    if (!monodromy_match || !anti_equivariance) return false;
    if (deninger_side.count != cc_side.count || deninger_side.covering_degree != cc_side.covering_degree) return false;
    return std::all_of(equivariance_checks.begin(), equivariance_checks.end(), [](const NamedCheck& c) { return c.ok; });
}

BridgeReport bridge_compare(const AbelianField& f, i64 p, i64 m, int p_exponent) {
    BridgeReport rep = compare_fibers(f, p, m, p_exponent);
    if (m != f.conductor())
        rep.equivariance_checks.push_back({"level_reduction", check_level_reduction(f, p, m, f.conductor(), p_exponent)});
    return rep;
}

bool check_level_reduction(const AbelianField& f, i64 p, i64 m, i64 m2, int p_exponent) {
    if (m2 < 1 || m % m2 != 0)
        fail(ErrorCode::InvalidArgument, std::to_string(m2) + " does not divide " + std::to_string(m));
    const BridgeReport hi = compare_fibers(f, p, m, p_exponent);
    const BridgeReport lo = compare_fibers(f, p, m2, p_exponent);
    if (hi.deninger_side.count != lo.deninger_side.count ||
        hi.deninger_side.covering_degree != lo.deninger_side.covering_degree ||
        hi.pushed_monodromy != lo.pushed_monodromy || hi.cc_monodromy != lo.cc_monodromy)
        return false;
    if (nt::mod(hi.deninger_monodromy, m2) != lo.deninger_monodromy) return false;

    const MappingTorus ph = deninger_packet(f, p, m), pl = deninger_packet(f, p, m2);
    const UnitQuotient base_hi = UnitQuotient::generated(m, {nt::mod(p, m)});
    const UnitQuotient base_lo = UnitQuotient::generated(m2, {nt::mod(p, m2)});
    std::vector<long> packet_image(ph.order(), -1), label_image(base_hi.order(), -1);
    const i64 target = nt::ipow(p, static_cast<unsigned>(p_exponent)) * m2;
    for (i64 u : unit_group(m)) {
        const i64 v = nt::mod(u, m2);
        if (f.restrict_unit(ModUnit{u, m}) != f.restrict_unit(ModUnit{v, m2})) return false;
        // Reduction must be well defined on packet classes and on labels.
        const auto hi_idx = ph.group().index_of(u);
        const auto lo_idx = static_cast<long>(pl.group().index_of(v));
        if (packet_image[hi_idx] == -1) packet_image[hi_idx] = lo_idx;
        else if (packet_image[hi_idx] != lo_idx) return false;
        const auto bh = base_hi.index_of(u);
        const auto bl = static_cast<long>(base_lo.index_of(v));
        if (label_image[bh] == -1) label_image[bh] = bl;
        else if (label_image[bh] != bl) return false;
        for (const mpz_class& n : {mpz_class(1), mpz_class(p + 2)}) {
            if (n % p == 0) continue;
            const FiniteAdeleFL a = psi_level(make_point(p, u, m, n), p_exponent);
            const FiniteAdeleFL b = psi_level(make_point(p, v, m2, n), p_exponent);
            if (nt::mod(a.residue, target) != b.residue) return false;
        }
    }
    return true;
}

} // namespace wittcft
