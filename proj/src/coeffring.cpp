#include "wittcft/coeffring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "wittcft/numtheory.hpp"
#include "wittcft/polynomial.hpp"

namespace wittcft {

namespace {

using ZVec = std::vector<mpz_class>;
using QVec = std::vector<mpq_class>;

// Non-owning handle into a table whose entries live for the whole program.
std::shared_ptr<const ZVec> table_handle(const ZVec& entry) {
    return std::shared_ptr<const ZVec>(std::shared_ptr<const void>(), &entry);
}

// v <- v mod m for a monic m (constant term first); v is resized to deg m.
template <typename C>
void reduce_by_monic(std::vector<C>& v, const ZVec& m) {
    const std::size_t d = m.size() - 1;
    for (std::size_t i = v.size(); i-- > d;) {
        if (v[i] == 0) continue;
        C c = v[i];
        for (std::size_t j = 0; j <= d; ++j) v[i - d + j] -= c * m[j];
    }
    v.resize(d);
}

mpz_class residue(const mpz_class& v, i64 m) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(m));
    return r;
}

template <typename C>
std::vector<C> convolve(const std::vector<C>& a, const std::vector<C>& b) {
    std::vector<C> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

ZVec compute_cyclotomic(i64 n) {
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    ZVec poly(static_cast<std::size_t>(n) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(n)] = 1;
    for (i64 d : nt::divisors(n)) {
        if (d == n) continue;
        const ZVec& phi = cyclotomic_polynomial(d);
        const std::size_t dp = phi.size() - 1;
        ZVec quotient(poly.size() - dp, 0);
        for (std::size_t i = poly.size(); i-- > dp;) {
            mpz_class c = poly[i];
            quotient[i - dp] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j <= dp; ++j) poly[i - dp + j] -= c * phi[j];
        }
        poly = std::move(quotient);
    }
    return poly;
}

std::string signed_terms(const std::vector<std::string>& coeffs, const std::vector<bool>& negative,
                         const std::vector<bool>& unit, const char* var) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].empty()) continue;
        if (negative[i]) out << '-';
        else if (!first) out << '+';
        if (i == 0) out << coeffs[i];
        else {
            if (!unit[i]) out << coeffs[i];
            out << var;
            if (i > 1) out << '^' << i;
        }
        first = false;
    }
    if (first) return "0";
    return out.str();
}

template <typename C>
std::string render_vector(const std::vector<C>& v) {
    std::vector<std::string> mags(v.size());
    std::vector<bool> neg(v.size()), unit(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        C a = abs(v[i]);
        neg[i] = v[i] < 0;
        unit[i] = (a == 1);
        std::string s = a.get_str();
        if (i > 0 && s.find('/') != std::string::npos) s = "(" + s + ")";
        mags[i] = s;
    }
    return signed_terms(mags, neg, unit, "x");
}

} // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(i64 n) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "cyclotomic_polynomial: level must be >= 1");
    static std::shared_mutex mutex;
    static std::map<i64, ZVec> table;
    {
        std::shared_lock lock(mutex);
        auto it = table.find(n);
        if (it != table.end()) return it->second;
    }
    ZVec phi = compute_cyclotomic(n);
    std::unique_lock lock(mutex);
    return table.try_emplace(n, std::move(phi)).first->second;
}

// ---------------------------------------------------------------- RingSpec

RingSpec RingSpec::integers() { return {RingKind::Integers, 0, 0, nullptr}; }
RingSpec RingSpec::rationals() { return {RingKind::Rationals, 0, 0, nullptr}; }

RingSpec RingSpec::mod_ring(i64 n) {
    if (n < 2) fail(ErrorCode::InvalidArgument, "ModRing modulus must be >= 2");
    return {RingKind::ModRing, n, 0, nullptr};
}

RingSpec RingSpec::prime_field(i64 p) {
    if (!nt::is_prime(p)) fail(ErrorCode::InvalidArgument, "PrimeField characteristic must be prime");
    return {RingKind::PrimeField, p, 0, nullptr};
}

RingSpec RingSpec::cyclotomic(i64 n) {
    const ZVec& phi = cyclotomic_polynomial(n);
    return {RingKind::Cyclotomic, n, phi.size() - 1, table_handle(phi)};
}

RingSpec RingSpec::cyclotomic_field(i64 n) {
    const ZVec& phi = cyclotomic_polynomial(n);
    return {RingKind::CyclotomicField, n, phi.size() - 1, table_handle(phi)};
}

RingSpec RingSpec::galois_field(i64 p, int k) {
    if (!nt::is_prime(p)) fail(ErrorCode::InvalidArgument, "GaloisField characteristic must be prime");
    if (k < 1) fail(ErrorCode::InvalidArgument, "GaloisField degree must be >= 1");
    const ZVec& f = irreducible_polynomial(p, k);
    return {RingKind::GaloisField, p, static_cast<std::size_t>(k), table_handle(f)};
}

const std::vector<mpz_class>& RingSpec::defining_polynomial() const {
    if (!defining_) fail(ErrorCode::InvalidArgument, "ring " + name() + " has no defining polynomial");
    return *defining_;
}

bool RingSpec::is_field() const noexcept {
    switch (kind_) {
    case RingKind::Rationals:
    case RingKind::PrimeField:
    case RingKind::GaloisField:
    case RingKind::CyclotomicField: return true;
    case RingKind::ModRing: return nt::is_prime(param_);
    default: return false;
    }
}

bool RingSpec::is_domain() const noexcept {
    return is_field() || kind_ == RingKind::Integers || kind_ == RingKind::Cyclotomic;
}

i64 RingSpec::characteristic() const noexcept {
    switch (kind_) {
    case RingKind::ModRing:
    case RingKind::PrimeField:
    case RingKind::GaloisField: return param_;
    default: return 0;
    }
}

RingSpec RingSpec::fraction_field() const {
    switch (kind_) {
    case RingKind::Integers: return rationals();
    case RingKind::Cyclotomic: return cyclotomic_field(param_);
    default:
        if (is_field()) return *this;
        fail(ErrorCode::InvalidArgument, "ring " + name() + " is not a domain");
    }
}

std::string RingSpec::name() const {
    switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::ModRing: return "Z/" + std::to_string(param_) + "Z";
    case RingKind::PrimeField: return "F_" + std::to_string(param_);
    case RingKind::Cyclotomic: return "Z[zeta_" + std::to_string(param_) + "]";
    case RingKind::CyclotomicField: return "Q(zeta_" + std::to_string(param_) + ")";
    case RingKind::GaloisField: return "F_" + std::to_string(param_) + "^" + std::to_string(width_);
    }
    return "?";
}

void require_same_spec(const RingSpec& a, const RingSpec& b, const char* where) {
    if (!(a == b)) fail(ErrorCode::SpecMismatch, std::string(where) + ": ring mismatch " + a.name() + " vs " + b.name());
}

// ------------------------------------------------------------- RingElement

RingElement::RingElement(const RingSpec& spec, long v) : RingElement(from_integer(spec, mpz_class(v))) {}

RingElement RingElement::from_integer(const RingSpec& spec, const mpz_class& v) {
    switch (spec.kind()) {
    case RingKind::Integers: return {spec, Payload{v}};
    case RingKind::Rationals: return {spec, Payload{mpq_class(v)}};
    case RingKind::ModRing:
    case RingKind::PrimeField: return {spec, Payload{residue(v, spec.modulus())}};
    case RingKind::Cyclotomic:
    case RingKind::GaloisField: {
        ZVec c(spec.width(), 0);
        c[0] = v;
        RingElement e{spec, Payload{std::move(c)}};
        e.canonicalize();
        return e;
    }
    case RingKind::CyclotomicField: {
        QVec c(spec.width(), 0);
        c[0] = v;
        return {spec, Payload{std::move(c)}};
    }
    }
    fail(ErrorCode::InvalidArgument, "unknown ring");
}

RingElement RingElement::from_rational(const RingSpec& spec, const mpq_class& v) {
    mpq_class q = v;
    q.canonicalize();
    switch (spec.kind()) {
    case RingKind::Rationals: return {spec, Payload{q}};
    case RingKind::CyclotomicField: {
        QVec c(spec.width(), 0);
        c[0] = q;
        return {spec, Payload{std::move(c)}};
    }
    case RingKind::Integers:
    case RingKind::Cyclotomic:
        if (q.get_den() != 1) fail(ErrorCode::InvalidArgument, "non-integral rational in " + spec.name());
        return from_integer(spec, q.get_num());
    default:
        return from_integer(spec, q.get_num()) * from_integer(spec, q.get_den()).inverse();
    }
}

RingElement RingElement::from_coefficients(const RingSpec& spec, std::vector<mpz_class> coeffs) {
    if (coeffs.empty()) coeffs.push_back(0);
    switch (spec.kind()) {
    case RingKind::Cyclotomic:
    case RingKind::GaloisField: {
        RingElement e{spec, Payload{std::move(coeffs)}};
        e.canonicalize();
        return e;
    }
    case RingKind::CyclotomicField: {
        QVec q(coeffs.begin(), coeffs.end());
        return from_rational_coefficients(spec, std::move(q));
    }
    default:
        for (std::size_t i = 1; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) fail(ErrorCode::InvalidArgument, spec.name() + " has no generator x");
        return from_integer(spec, coeffs[0]);
    }
}

RingElement RingElement::from_rational_coefficients(const RingSpec& spec, std::vector<mpq_class> coeffs) {
    if (spec.kind() != RingKind::CyclotomicField)
        fail(ErrorCode::InvalidArgument, "rational coefficient vectors need Q(zeta_n)");
    if (coeffs.empty()) coeffs.push_back(0);
    for (auto& c : coeffs) c.canonicalize();
    RingElement e{spec, Payload{std::move(coeffs)}};
    e.canonicalize();
    return e;
}

RingElement RingElement::generator(const RingSpec& spec) {
    if (spec.kind() != RingKind::Cyclotomic && spec.kind() != RingKind::GaloisField &&
        spec.kind() != RingKind::CyclotomicField)
        fail(ErrorCode::InvalidArgument, spec.name() + " has no generator x");
    return from_coefficients(spec, {0, 1});
}

void RingElement::canonicalize() {
    switch (spec_.kind()) {
    case RingKind::ModRing:
    case RingKind::PrimeField: {
        auto& v = std::get<mpz_class>(value_);
        if (v < 0 || v >= spec_.modulus()) v = residue(v, spec_.modulus());
        break;
    }
    case RingKind::Rationals: std::get<mpq_class>(value_).canonicalize(); break;
    case RingKind::Cyclotomic: reduce_by_monic(std::get<ZVec>(value_), spec_.defining_polynomial()); break;
    case RingKind::CyclotomicField: reduce_by_monic(std::get<QVec>(value_), spec_.defining_polynomial()); break;
    case RingKind::GaloisField: {
        auto& v = std::get<ZVec>(value_);
        for (auto& c : v) c = residue(c, spec_.modulus());
        reduce_by_monic(v, spec_.defining_polynomial());
        for (auto& c : v) c = residue(c, spec_.modulus());
        break;
    }
    case RingKind::Integers: break;
    }
}

bool RingElement::is_zero() const {
    return std::visit(
        [](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, mpz_class> || std::is_same_v<V, mpq_class>) {
                return v == 0;
            } else {
                for (const auto& c : v)
                    if (c != 0) return false;
                return true;
            }
        },
        value_);
}

bool RingElement::is_one() const { return *this == one(spec_); }

bool RingElement::is_unit() const {
    switch (spec_.kind()) {
    case RingKind::Integers: return abs(integer()) == 1;
    case RingKind::ModRing:
    case RingKind::PrimeField: {
        mpz_class g;
        mpz_class m(static_cast<long>(spec_.modulus()));
        mpz_gcd(g.get_mpz_t(), integer().get_mpz_t(), m.get_mpz_t());
        return g == 1;
    }
    case RingKind::Cyclotomic:
        try {
            (void)inverse();
            return true;
        } catch (const Error&) {
            return false;
        }
    default: return !is_zero();
    }
}

bool RingElement::is_rational_integer() const {
    switch (spec_.kind()) {
    case RingKind::Rationals: return rational().get_den() == 1;
    case RingKind::Cyclotomic: {
        const auto& v = coefficients();
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] != 0) return false;
        return true;
    }
    case RingKind::CyclotomicField: {
        const auto& v = rational_coefficients();
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] != 0) return false;
        return v[0].get_den() == 1;
    }
    case RingKind::GaloisField: {
        const auto& v = coefficients();
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] != 0) return false;
        return true;
    }
    default: return true;
    }
}

RingElement RingElement::inverse() const {
    const std::string not_unit = "element " + to_string() + " is not a unit in " + spec_.name();
    switch (spec_.kind()) {
    case RingKind::Integers:
        if (abs(integer()) != 1) fail(ErrorCode::NotAUnit, not_unit);
        return *this;
    case RingKind::Rationals: {
        if (is_zero()) fail(ErrorCode::NotAUnit, not_unit);
        mpq_class q = 1 / rational();
        return {spec_, Payload{q}};
    }
    case RingKind::ModRing:
    case RingKind::PrimeField: {
        mpz_class inv;
        mpz_class m(static_cast<long>(spec_.modulus()));
        if (mpz_invert(inv.get_mpz_t(), integer().get_mpz_t(), m.get_mpz_t()) == 0)
            fail(ErrorCode::NotAUnit, not_unit);
        return {spec_, Payload{inv}};
    }
    case RingKind::GaloisField: {
        if (is_zero()) fail(ErrorCode::NotAUnit, not_unit);
        const RingSpec base = RingSpec::prime_field(spec_.modulus());
        auto eg = ext_gcd(Polynomial::from_integers(base, coefficients()),
                          Polynomial::from_integers(base, spec_.defining_polynomial()));
        ZVec out;
        for (const auto& c : eg.s.coefficients()) out.push_back(c.integer());
        return from_coefficients(spec_, std::move(out));
    }
    case RingKind::CyclotomicField: {
        if (is_zero()) fail(ErrorCode::NotAUnit, not_unit);
        const RingSpec base = RingSpec::rationals();
        std::vector<RingElement> a;
        for (const auto& c : rational_coefficients()) a.push_back(from_rational(base, c));
        auto eg = ext_gcd(Polynomial(base, std::move(a)),
                          Polynomial::from_integers(base, spec_.defining_polynomial()));
        QVec out;
        for (const auto& c : eg.s.coefficients()) out.push_back(c.rational());
        return from_rational_coefficients(spec_, std::move(out));
    }
    case RingKind::Cyclotomic: {
        if (is_zero()) fail(ErrorCode::NotAUnit, not_unit);
        RingElement inv = map_to(spec_.fraction_field()).inverse();
        ZVec out;
        for (const auto& c : inv.rational_coefficients()) {
            if (c.get_den() != 1) fail(ErrorCode::NotAUnit, not_unit);
            out.push_back(c.get_num());
        }
        return from_coefficients(spec_, std::move(out));
    }
    }
    fail(ErrorCode::NotAUnit, not_unit);
}

RingElement RingElement::pow(std::uint64_t e) const {
    RingElement result = one(spec_);
    RingElement base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

RingElement RingElement::exact_divide(const RingElement& divisor) const {
    require_same_spec(spec_, divisor.spec_, "exact_divide");
    if (divisor.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero");
    switch (spec_.kind()) {
    case RingKind::Integers: {
        if (!mpz_divisible_p(integer().get_mpz_t(), divisor.integer().get_mpz_t()))
            fail(ErrorCode::InvalidArgument, "exact_divide: " + to_string() + " not divisible by " + divisor.to_string());
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), integer().get_mpz_t(), divisor.integer().get_mpz_t());
        return {spec_, Payload{q}};
    }
    case RingKind::Cyclotomic: {
        const RingSpec frac = spec_.fraction_field();
        RingElement q = map_to(frac) * divisor.map_to(frac).inverse();
        ZVec out;
        for (const auto& c : q.rational_coefficients()) {
            if (c.get_den() != 1)
                fail(ErrorCode::InvalidArgument, "exact_divide: quotient not integral in " + spec_.name());
            out.push_back(c.get_num());
        }
        return from_coefficients(spec_, std::move(out));
    }
    default: return *this * divisor.inverse();
    }
}

RingElement RingElement::map_to(const RingSpec& target) const {
    if (spec_ == target) return *this;
    const RingKind from = spec_.kind();
    const RingKind to = target.kind();
    if (from == RingKind::Integers) return from_integer(target, integer());
    if (from == RingKind::Rationals) return from_rational(target, rational());
    if ((from == RingKind::ModRing || from == RingKind::PrimeField) &&
        (to == RingKind::ModRing || to == RingKind::PrimeField || to == RingKind::GaloisField) &&
        spec_.modulus() % target.modulus() == 0)
        return from_integer(target, integer());
    if (from == RingKind::Cyclotomic && to == RingKind::CyclotomicField && spec_.level() == target.level()) {
        QVec out(coefficients().begin(), coefficients().end());
        return {target, Payload{std::move(out)}};
    }
    if (from == RingKind::CyclotomicField && to == RingKind::Cyclotomic && spec_.level() == target.level()) {
        ZVec out;
        for (const auto& c : rational_coefficients()) {
            if (c.get_den() != 1) fail(ErrorCode::SpecMismatch, "value " + to_string() + " is not in " + target.name());
            out.push_back(c.get_num());
        }
        return {target, Payload{std::move(out)}};
    }
    if ((from == RingKind::Cyclotomic || from == RingKind::GaloisField) && is_rational_integer()) {
        if (to == RingKind::Integers || to == RingKind::Rationals ||
            (from == RingKind::GaloisField && (to == RingKind::PrimeField || to == RingKind::ModRing) &&
             target.modulus() == spec_.modulus()))
            return from_integer(target, coefficients()[0]);
    }
    if (from == RingKind::CyclotomicField && (to == RingKind::Rationals || to == RingKind::Integers)) {
        const auto& v = rational_coefficients();
        if (std::all_of(v.begin() + 1, v.end(), [](const mpq_class& c) { return c == 0; }))
            return from_rational(target, v[0]);
    }
    fail(ErrorCode::SpecMismatch, "no ring map " + spec_.name() + " -> " + target.name() + " for " + to_string());
}

const mpz_class& RingElement::integer() const {
    if (auto* v = std::get_if<mpz_class>(&value_)) return *v;
    fail(ErrorCode::SpecMismatch, "integer payload requested from " + spec_.name());
}

const mpq_class& RingElement::rational() const {
    if (auto* v = std::get_if<mpq_class>(&value_)) return *v;
    fail(ErrorCode::SpecMismatch, "rational payload requested from " + spec_.name());
}

const std::vector<mpz_class>& RingElement::coefficients() const {
    if (auto* v = std::get_if<ZVec>(&value_)) return *v;
    fail(ErrorCode::SpecMismatch, "coefficient payload requested from " + spec_.name());
}

const std::vector<mpq_class>& RingElement::rational_coefficients() const {
    if (auto* v = std::get_if<QVec>(&value_)) return *v;
    fail(ErrorCode::SpecMismatch, "rational coefficient payload requested from " + spec_.name());
}

RingElement RingElement::operator-() const {
    RingElement z = zero(spec_);
    return z -= *this;
}

RingElement& RingElement::operator+=(const RingElement& o) {
    require_same_spec(spec_, o.spec_, "add");
    switch (spec_.kind()) {
    case RingKind::Integers: std::get<mpz_class>(value_) += std::get<mpz_class>(o.value_); break;
    case RingKind::ModRing:
    case RingKind::PrimeField: {
        auto& v = std::get<mpz_class>(value_);
        v += std::get<mpz_class>(o.value_);
        if (v >= spec_.modulus()) v -= spec_.modulus();
        break;
    }
    case RingKind::Rationals: std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_); break;
    case RingKind::Cyclotomic:
    case RingKind::GaloisField: {
        auto& v = std::get<ZVec>(value_);
        const auto& w = std::get<ZVec>(o.value_);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
        if (spec_.kind() == RingKind::GaloisField)
            for (auto& c : v)
                if (c >= spec_.modulus()) c -= spec_.modulus();
        break;
    }
    case RingKind::CyclotomicField: {
        auto& v = std::get<QVec>(value_);
        const auto& w = std::get<QVec>(o.value_);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
        break;
    }
    }
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    require_same_spec(spec_, o.spec_, "sub");
    switch (spec_.kind()) {
    case RingKind::Integers: std::get<mpz_class>(value_) -= std::get<mpz_class>(o.value_); break;
    case RingKind::ModRing:
    case RingKind::PrimeField: {
        auto& v = std::get<mpz_class>(value_);
        v -= std::get<mpz_class>(o.value_);
        if (v < 0) v += spec_.modulus();
        break;
    }
    case RingKind::Rationals: std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_); break;
    case RingKind::Cyclotomic:
    case RingKind::GaloisField: {
        auto& v = std::get<ZVec>(value_);
        const auto& w = std::get<ZVec>(o.value_);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= w[i];
        if (spec_.kind() == RingKind::GaloisField)
            for (auto& c : v)
                if (c < 0) c += spec_.modulus();
        break;
    }
    case RingKind::CyclotomicField: {
        auto& v = std::get<QVec>(value_);
        const auto& w = std::get<QVec>(o.value_);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= w[i];
        break;
    }
    }
    return *this;
}

RingElement& RingElement::operator*=(const RingElement& o) {
    require_same_spec(spec_, o.spec_, "mul");
    switch (spec_.kind()) {
    case RingKind::Integers: std::get<mpz_class>(value_) *= std::get<mpz_class>(o.value_); break;
    case RingKind::ModRing:
    case RingKind::PrimeField: {
        auto& v = std::get<mpz_class>(value_);
        v *= std::get<mpz_class>(o.value_);
        v = residue(v, spec_.modulus());
        break;
    }
    case RingKind::Rationals: std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_); break;
    case RingKind::Cyclotomic:
    case RingKind::GaloisField:
        value_ = convolve(std::get<ZVec>(value_), std::get<ZVec>(o.value_));
        canonicalize();
        break;
    case RingKind::CyclotomicField:
        value_ = convolve(std::get<QVec>(value_), std::get<QVec>(o.value_));
        canonicalize();
        break;
    }
    return *this;
}

int RingElement::compare(const RingElement& o) const {
    require_same_spec(spec_, o.spec_, "compare");
    return std::visit(
        [&o](const auto& v) -> int {
            using V = std::decay_t<decltype(v)>;
            const auto& w = std::get<V>(o.value_);
            if constexpr (std::is_same_v<V, mpz_class> || std::is_same_v<V, mpq_class>) {
                return cmp(v, w) < 0 ? -1 : (cmp(v, w) > 0 ? 1 : 0);
            } else {
                for (std::size_t i = 0; i < v.size(); ++i) {
                    int c = cmp(v[i], w[i]);
                    if (c != 0) return c < 0 ? -1 : 1;
                }
                return 0;
            }
        },
        value_);
}

std::string RingElement::to_string() const {
    return std::visit(
        [](const auto& v) -> std::string {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, mpz_class> || std::is_same_v<V, mpq_class>) {
                return v.get_str();
            } else {
                return render_vector(v);
            }
        },
        value_);
}

RingElement cyclotomic_conjugate(const RingElement& a, i64 sigma) {
    const RingSpec& spec = a.spec();
    if (spec.kind() != RingKind::Cyclotomic && spec.kind() != RingKind::CyclotomicField)
        fail(ErrorCode::SpecMismatch, "cyclotomic_conjugate needs a cyclotomic ring, got " + spec.name());
    const i64 n = spec.level();
    const i64 s = nt::mod(sigma, n);
    if (nt::gcd(s, n) != 1 && n > 1)
        fail(ErrorCode::NotAUnit, "cyclotomic_conjugate: " + std::to_string(sigma) + " is not a unit mod " + std::to_string(n));
    // x^i -> x^(i*sigma mod n) is legitimate because Phi_n divides x^n - 1.
    if (spec.kind() == RingKind::Cyclotomic) {
        ZVec out(static_cast<std::size_t>(n), 0);
        const auto& v = a.coefficients();
        for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(nt::mul_mod(static_cast<i64>(i), s, n))] += v[i];
        return RingElement::from_coefficients(spec, std::move(out));
    }
    QVec out(static_cast<std::size_t>(n), 0);
    const auto& v = a.rational_coefficients();
    for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(nt::mul_mod(static_cast<i64>(i), s, n))] += v[i];
    return RingElement::from_rational_coefficients(spec, std::move(out));
}

} // namespace wittcft
