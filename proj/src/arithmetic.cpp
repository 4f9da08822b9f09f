#include "wittcft/arithmetic.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "wittcft/polynomial.hpp"

namespace wittcft {

namespace {

std::string join(const std::vector<i64>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    return out.str();
}

void require_prime(i64 p, const char* where) {
    if (!nt::is_prime(p)) fail(ErrorCode::InvalidArgument, std::string(where) + ": " + std::to_string(p) + " is not prime");
}

void require_level(i64 n, const char* where) {
    if (n < 1) fail(ErrorCode::InvalidArgument, std::string(where) + ": level must be positive, got " + std::to_string(n));
}

} // namespace

ModUnit ModUnit::make(i64 value, i64 modulus) {
    require_level(modulus, "ModUnit");
    const i64 v = nt::mod(value, modulus);
    if (nt::gcd(v, modulus) != 1)
        fail(ErrorCode::NotCoprime, std::to_string(value) + " is not a unit mod " + std::to_string(modulus));
    return {v, modulus};
}

ModUnit ModUnit::reduce(i64 divisor) const {
    require_level(divisor, "ModUnit::reduce");
    if (modulus % divisor != 0)
        fail(ErrorCode::InvalidArgument, std::to_string(divisor) + " does not divide " + std::to_string(modulus));
    return {nt::mod(value, divisor), divisor};
}

ModUnit ModUnit::operator*(const ModUnit& o) const {
    if (modulus != o.modulus) fail(ErrorCode::SpecMismatch, "ModUnit moduli differ");
    return {nt::mul_mod(value, o.value, modulus), modulus};
}

std::string ModUnit::to_string() const { return std::to_string(value) + " mod " + std::to_string(modulus); }

std::vector<i64> unit_group(i64 n) {
    require_level(n, "unit_group");
    if (n == 1) return {0};
    std::vector<i64> out;
    for (i64 u = 1; u < n; ++u)
        if (nt::gcd(u, n) == 1) out.push_back(u);
    return out;
}

std::vector<i64> subgroup_generated(i64 n, const std::vector<i64>& gens) {
    require_level(n, "subgroup_generated");
    std::vector<i64> reduced;
    for (i64 g : gens) {
        const i64 r = nt::mod(g, n);
        if (nt::gcd(r, n) != 1) fail(ErrorCode::NotAUnit, std::to_string(g) + " is not a unit mod " + std::to_string(n));
        reduced.push_back(r);
    }
    const i64 one = nt::mod(1, n);
    std::set<i64> seen{one};
    std::vector<i64> frontier{one};
    while (!frontier.empty()) {
        std::vector<i64> next;
        for (i64 s : frontier)
            for (i64 g : reduced) {
                const i64 t = nt::mul_mod(s, g, n);
                if (seen.insert(t).second) next.push_back(t);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::vector<i64>> all_subgroups(i64 n) {
    const std::vector<i64> units = unit_group(n);
    std::set<std::vector<i64>> found{subgroup_generated(n, {})};
    std::vector<std::vector<i64>> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
        std::vector<std::vector<i64>> next;
        for (const auto& s : frontier)
            for (i64 g : units) {
                if (std::binary_search(s.begin(), s.end(), g)) continue;
                std::vector<i64> gens = s;
                gens.push_back(g);
                auto t = subgroup_generated(n, gens);
                if (found.insert(t).second) next.push_back(std::move(t));
            }
        frontier = std::move(next);
    }
    std::vector<std::vector<i64>> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

UnitQuotient::UnitQuotient(i64 modulus, std::vector<i64> subgroup) : modulus_(modulus) {
    require_level(modulus, "UnitQuotient");
    for (i64& h : subgroup) {
        h = nt::mod(h, modulus);
        if (nt::gcd(h, modulus) != 1)
            fail(ErrorCode::InvalidArgument, std::to_string(h) + " is not a unit mod " + std::to_string(modulus));
    }
    std::sort(subgroup.begin(), subgroup.end());
    subgroup.erase(std::unique(subgroup.begin(), subgroup.end()), subgroup.end());
    if (!std::binary_search(subgroup.begin(), subgroup.end(), nt::mod(1, modulus)))
        fail(ErrorCode::InvalidArgument, "subgroup {" + join(subgroup) + "} does not contain 1");
    for (i64 a : subgroup)
        for (i64 b : subgroup)
            if (!std::binary_search(subgroup.begin(), subgroup.end(), nt::mul_mod(a, b, modulus)))
                fail(ErrorCode::InvalidArgument, "{" + join(subgroup) + "} is not closed under multiplication mod " +
                                                     std::to_string(modulus));
    subgroup_ = std::move(subgroup);

    coset_of_.assign(static_cast<std::size_t>(modulus), -1);
    for (i64 u : unit_group(modulus)) {
        if (coset_of_[static_cast<std::size_t>(u)] >= 0) continue;
        std::vector<i64> coset;
        for (i64 h : subgroup_) coset.push_back(nt::mul_mod(u, h, modulus));
        std::sort(coset.begin(), coset.end());
        for (i64 c : coset) coset_of_[static_cast<std::size_t>(c)] = static_cast<long>(cosets_.size());
        cosets_.push_back(std::move(coset));
    }
}

UnitQuotient UnitQuotient::generated(i64 modulus, const std::vector<i64>& gens) {
    return {modulus, subgroup_generated(modulus, gens)};
}

std::size_t UnitQuotient::index_of(i64 unit) const {
    const long idx = coset_of_[static_cast<std::size_t>(nt::mod(unit, modulus_))];
    if (idx < 0) fail(ErrorCode::NotAUnit, std::to_string(unit) + " is not a unit mod " + std::to_string(modulus_));
    return static_cast<std::size_t>(idx);
}

std::size_t UnitQuotient::multiply(std::size_t a, std::size_t b) const {
    return index_of(nt::mul_mod(representative(a), representative(b), modulus_));
}

std::size_t UnitQuotient::power(std::size_t a, std::uint64_t e) const {
    return index_of(nt::pow_mod(representative(a), e, modulus_));
}

std::size_t UnitQuotient::inverse(std::size_t a) const {
    return index_of(nt::inverse_mod(representative(a), modulus_).value());
}

std::size_t UnitQuotient::element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != identity(); x = multiply(x, a)) ++k;
    return k;
}

int legendre(i64 q, i64 p) {
    if (p == 2 || !nt::is_prime(p))
        fail(ErrorCode::InvalidArgument, "legendre: " + std::to_string(p) + " is not an odd prime");
    if (nt::mod(q, p) == 0) return 0;
    return nt::pow_mod(q, static_cast<std::uint64_t>((p - 1) / 2), p) == 1 ? 1 : -1;
}

ModUnit linking_hom(i64 p, i64 m) {
    require_prime(p, "linking_hom");
    require_level(m, "linking_hom");
    if (m % p == 0)
        fail(ErrorCode::NotCoprime, "linking_hom: " + std::to_string(p) + " divides level " + std::to_string(m));
    return {nt::mod(p, m), m};
}

CrtResult crt_combine(const std::vector<std::pair<i64, i64>>& residues) {
    CrtResult acc{0, 1};
    for (const auto& [value, modulus] : residues) {
        require_level(modulus, "crt_combine");
        const auto inv = nt::inverse_mod(acc.modulus, modulus);
        if (!inv)
            fail(ErrorCode::NotCoprime, "crt_combine: moduli " + std::to_string(acc.modulus) + " and " +
                                            std::to_string(modulus) + " are not coprime");
        const i64 step = nt::mul_mod(nt::mod(value - acc.value, modulus), *inv, modulus);
        const i64 product = acc.modulus * modulus;
        acc = {nt::mod(acc.value + static_cast<i64>(static_cast<__int128>(acc.modulus) * step % product), product),
               product};
    }
    return acc;
}

i64 lift_unit(i64 r, i64 c, i64 n) {
    if (n % c != 0) fail(ErrorCode::InvalidArgument, std::to_string(c) + " does not divide " + std::to_string(n));
    const i64 base = nt::mod(r, c);
    for (i64 u = base; u < n || (n == 1 && u == 0); u += c)
        if (nt::gcd(u, n) == 1) return nt::mod(u, n);
    fail(ErrorCode::NotAUnit, std::to_string(r) + " mod " + std::to_string(c) + " has no unit lift mod " +
                                  std::to_string(n));
}

AbelianField::AbelianField(i64 level, std::vector<i64> subgroup, std::string label)
    : level_(level), group_(std::make_shared<const UnitQuotient>(level, std::move(subgroup))), label_(std::move(label)) {
    conductor_ = level_;
    for (i64 c : nt::divisors(level_)) {
        bool kernel_inside = true;
        for (i64 u : unit_group(level_))
            if (nt::mod(u, c) == nt::mod(1, c) && !contains(u)) {
                kernel_inside = false;
                break;
            }
        if (kernel_inside) {
            conductor_ = c;
            break;
        }
    }
    if (label_.empty()) {
        if (degree() == 1)
            label_ = "Q";
        else if (group_->subgroup().size() == 1)
            label_ = "Q(zeta_" + std::to_string(level_) + ")";
        else
            label_ = "Q(zeta_" + std::to_string(level_) + ")^{" + join(group_->subgroup()) + "}";
    }
}

AbelianField AbelianField::rationals() { return {1, {0}, "Q"}; }

AbelianField AbelianField::cyclotomic(i64 n) {
    require_level(n, "cyclotomic");
    return {n, subgroup_generated(n, {})};
}

AbelianField AbelianField::from_generators(i64 n, const std::vector<i64>& gens) {
    require_level(n, "from_generators");
    return {n, subgroup_generated(n, gens)};
}

AbelianField AbelianField::quadratic(i64 q) {
    if (q == 2 || !nt::is_prime(q))
        fail(ErrorCode::InvalidArgument, "quadratic: " + std::to_string(q) + " is not an odd prime");
    const std::string label = "Q(sqrt " + std::to_string(q) + ")";
    std::vector<i64> h;
    if (q % 4 == 1) {
        for (i64 u = 1; u < q; ++u)
            if (legendre(u, q) == 1) h.push_back(u);
        return {q, h, label};
    }
    // Discriminant 4q: the character u -> chi_{-4}(u) (u / q).
    const i64 n = 4 * q;
    for (i64 u : unit_group(n)) {
        const int chi4 = (u % 4 == 1) ? 1 : -1;
        if (chi4 * legendre(u, q) == 1) h.push_back(u);
    }
    return {n, h, label};
}

bool AbelianField::contains(i64 unit) const {
    const auto& h = group_->subgroup();
    return std::binary_search(h.begin(), h.end(), nt::mod(unit, level_));
}

AbelianField AbelianField::at_level(i64 m) const {
    require_level(m, "at_level");
    if (m % conductor_ != 0)
        fail(ErrorCode::InvalidArgument, "level " + std::to_string(m) + " is not a multiple of the conductor " +
                                             std::to_string(conductor_));
    std::set<i64> image;
    for (i64 h : group_->subgroup()) image.insert(nt::mod(h, conductor_));
    std::vector<i64> sub;
    for (i64 u : unit_group(m))
        if (image.count(nt::mod(u, conductor_))) sub.push_back(u);
    return {m, sub, label_};
}

std::size_t AbelianField::restrict_unit(const ModUnit& u) const {
    if (u.modulus % conductor_ != 0)
        fail(ErrorCode::InvalidArgument, "level " + std::to_string(u.modulus) + " is not a multiple of the conductor " +
                                             std::to_string(conductor_));
    return group_->index_of(lift_unit(u.value, conductor_, level_));
}

i64 conductor(const AbelianField& f) { return f.conductor(); }

std::vector<i64> ramified_set(const AbelianField& f) {
    if (f.conductor() == 1) return {};
    return nt::prime_factors(f.conductor());
}

std::vector<i64> ramified_set_by_inertia(const AbelianField& f) {
    std::vector<i64> out;
    const i64 n = f.level();
    if (n == 1) return out;
    for (i64 q : nt::prime_factors(n)) {
        i64 rest = n;
        while (rest % q == 0) rest /= q;
        for (i64 u : unit_group(n))
            if (nt::mod(u, rest) == nt::mod(1, rest) && !f.contains(u)) {
                out.push_back(q);
                break;
            }
    }
    return out;
}

bool is_ramified(const AbelianField& f, i64 p) { return p > 1 && f.conductor() % p == 0; }

ArtinClass artin_symbol(const AbelianField& f, i64 p) {
    require_prime(p, "artin_symbol");
    if (is_ramified(f, p))
        fail(ErrorCode::Ramified, std::to_string(p) + " is ramified in " + f.label() + " (R_F = {" +
                                      join(ramified_set(f)) + "})");
    const i64 n = f.level();
    const i64 u = (n % p == 0) ? lift_unit(p, f.conductor(), n) : nt::mod(p, n);
    const std::size_t idx = f.galois_group().index_of(u);
    return {idx, f.galois_group().representative(idx)};
}

SplitData split_invariants(const AbelianField& f, i64 p) {
    const ArtinClass a = artin_symbol(f, p);
    const auto& g = f.galois_group();
    const i64 deg = static_cast<i64>(g.element_order(a.index));
    mpz_class norm;
    mpz_ui_pow_ui(norm.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(deg));
    return {p, a, g.coset(a.index), deg, static_cast<i64>(g.order()) / deg, norm};
}

FactorDegrees cyclotomic_factor_degrees(i64 n, i64 p) {
    require_level(n, "cyclotomic_factor_degrees");
    require_prime(p, "cyclotomic_factor_degrees");
    if (n % p == 0)
        fail(ErrorCode::NotCoprime, "cyclotomic_factor_degrees: " + std::to_string(p) + " divides " + std::to_string(n));
    const RingSpec fp = RingSpec::prime_field(p);
    Polynomial g = Polynomial::from_integers(fp, cyclotomic_polynomial(n));
    const Polynomial x = Polynomial::variable(fp);
    Polynomial h = x;
    FactorDegrees out{0, 0, {}};
    const mpz_class exp(static_cast<long>(p));
    for (i64 k = 1; g.degree() > 0; ++k) {
        h = powmod(h, exp, g);  // x^(p^k) mod g
        const Polynomial d = poly_gcd(g, h - x);
        if (d.degree() > 0) {
            out.profile.emplace_back(k, d.degree() / k);
            g = divmod(g, d).quotient;
            if (g.degree() > 0) h = divmod(h, g).remainder;
        }
    }
    out.degree = out.profile.front().first;
    out.count = out.profile.front().second;
    return out;
}

} // namespace wittcft
