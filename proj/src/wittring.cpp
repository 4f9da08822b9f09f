#include "wittcft/wittring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "wittcft/matrix.hpp"
#include "wittcft/numtheory.hpp"

namespace wittcft {

namespace {

constexpr i64 kCoprimalityPrime = 2305843009213693951LL;  // 2^61 - 1

Polynomial one_poly(const RingSpec& spec) { return Polynomial::constant(RingElement::one(spec)); }

bool is_one_poly(const Polynomial& p) { return p.degree() == 0 && p.coeff(0).is_one(); }

void require_constant_one(const Polynomial& p, const char* which) {
    if (!p.constant_term().is_one())
        fail(ErrorCode::InvalidArgument, std::string("Witt vector ") + which + " must have constant term 1, got " +
                                             p.to_string());
}

// Rescales a divisor of a constant-term-1 polynomial so its own constant term is 1.
Polynomial unit_constant(const Polynomial& g) {
    const RingElement c = g.constant_term();
    if (c.is_one()) return g;
    return g * c.inverse();
}

// Sufficient test for gcd(f, g) = 1 over Z: reduce modulo a large prime that
// keeps the degree of f.
bool coprime_mod_prime(const Polynomial& f, const Polynomial& g) {
    const RingSpec fp = RingSpec::prime_field(kCoprimalityPrime);
    Polynomial fr = f.map_to(fp), gr = g.map_to(fp);
    if (fr.degree() != f.degree()) return false;
    return poly_gcd(fr, gr).degree() == 0;
}

Polynomial gcd_for_normalization(const Polynomial& num, const Polynomial& den) {
    const RingSpec& spec = num.spec();
    switch (spec.kind()) {
    case RingKind::Integers: {
        if (coprime_mod_prime(num, den)) return one_poly(spec);
        Polynomial g = integer_poly_gcd(num, den);
        return g.constant_term().integer() < 0 ? -g : g;
    }
    case RingKind::ModRing:
        if (!spec.is_field()) return one_poly(spec);
        [[fallthrough]];
    default:
        return unit_constant(poly_gcd(num, den));
    }
}

// rev(p) as a companion matrix: C[i+1][i] = 1, last column the negated
// coefficients of the monic reversed polynomial.
Matrix<RingElement> companion_of_reversed(const Polynomial& p) {
    const RingSpec& spec = p.spec();
    const std::size_t d = static_cast<std::size_t>(p.degree());
    Matrix<RingElement> c(d, std::vector<RingElement>(d, RingElement::zero(spec)));
    for (std::size_t i = 0; i + 1 < d; ++i) c[i + 1][i] = RingElement::one(spec);
    // rev(p) = x^d + p_1 x^(d-1) + ... + p_d, so its x^i coefficient is p_(d-i).
    for (std::size_t i = 0; i < d; ++i) c[i][d - 1] = -p.coeff(d - i);
    return c;
}

Matrix<RingElement> identity_matrix(const RingSpec& spec, std::size_t d) {
    Matrix<RingElement> m(d, std::vector<RingElement>(d, RingElement::zero(spec)));
    for (std::size_t i = 0; i < d; ++i) m[i][i] = RingElement::one(spec);
    return m;
}

Matrix<RingElement> matrix_power(Matrix<RingElement> base, std::uint64_t e, const RingSpec& spec) {
    const RingElement zero = RingElement::zero(spec);
    Matrix<RingElement> result = identity_matrix(spec, base.size());
    while (e > 0) {
        if (e & 1U) result = matrix_product(result, base, zero);
        e >>= 1U;
        if (e > 0) base = matrix_product(base, base, zero);
    }
    return result;
}

} // namespace

WittVector::WittVector(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_spec(num_.spec(), den_.spec(), "WittVector");
    require_constant_one(num_, "numerator");
    require_constant_one(den_, "denominator");
    normalize();
}

WittVector::WittVector(Polynomial num) : WittVector(num, one_poly(num.spec())) {}

WittVector WittVector::zero(const RingSpec& spec) { return {one_poly(spec), one_poly(spec), Raw{}}; }

void WittVector::normalize() {
    if (is_one_poly(num_) || is_one_poly(den_)) return;
    const RingSpec spec = num_.spec();
    if (spec.kind() == RingKind::Cyclotomic) {
        const RingSpec field = spec.fraction_field();
        Polynomial n = num_.map_to(field), d = den_.map_to(field);
        Polynomial g = unit_constant(poly_gcd(n, d));
        if (g.degree() == 0) return;
        num_ = divmod(n, g).quotient.map_to(spec);
        den_ = divmod(d, g).quotient.map_to(spec);
        return;
    }
    Polynomial g = gcd_for_normalization(num_, den_);
    if (g.degree() <= 0) return;
    if (spec.is_field()) {
        num_ = divmod(num_, g).quotient;
        den_ = divmod(den_, g).quotient;
    } else {
        num_ = exact_quotient(num_, g);
        den_ = exact_quotient(den_, g);
    }
}

bool WittVector::is_zero() const { return num_ == den_; }

bool WittVector::has_rational_integer_coefficients() const {
    auto integral = [](const Polynomial& p) {
        return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                           [](const RingElement& c) { return c.is_rational_integer(); });
    };
    return integral(num_) && integral(den_);
}

bool operator==(const WittVector& f, const WittVector& g) {
    if (!(f.spec() == g.spec())) return false;
    if (f.num_ == g.num_ && f.den_ == g.den_) return true;
    return f.num_ * g.den_ == g.num_ * f.den_;
}

std::string WittVector::to_string() const {
    if (is_one_poly(den_)) return num_.to_string();
    const std::string d = den_.to_string();
    if (is_one_poly(num_)) return "1/(" + d + ")";
    return "(" + num_.to_string() + ")/(" + d + ")";
}

Polynomial otimes_factor(const Polynomial& p_in, const Polynomial& q_in) {
    require_same_spec(p_in.spec(), q_in.spec(), "otimes");
    const RingSpec& spec = p_in.spec();
    if (is_one_poly(p_in) || is_one_poly(q_in)) return one_poly(spec);
    const bool swap = p_in.degree() > q_in.degree();
    const Polynomial& p = swap ? q_in : p_in;
    const Polynomial& q = swap ? p_in : q_in;
    require_constant_one(p, "factor");
    require_constant_one(q, "factor");

    // det(q(t C)) with C the companion matrix of rev(p); entries live in R[t].
    const std::size_t d = static_cast<std::size_t>(p.degree());
    const std::size_t e = static_cast<std::size_t>(q.degree());
    const RingElement zero = RingElement::zero(spec);
    const Matrix<RingElement> c = companion_of_reversed(p);
    std::vector<std::vector<std::vector<RingElement>>> entries(
        d, std::vector<std::vector<RingElement>>(d, std::vector<RingElement>(e + 1, zero)));
    Matrix<RingElement> power = identity_matrix(spec, d);
    for (std::size_t k = 0; k <= e; ++k) {
        const RingElement qk = q.coeff(k);
        if (!qk.is_zero())
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) entries[i][j][k] = qk * power[i][j];
        if (k < e) power = matrix_product(power, c, zero);
    }
    Matrix<Polynomial> m(d, std::vector<Polynomial>(d, Polynomial(spec)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m[i][j] = Polynomial(spec, std::move(entries[i][j]));
    return determinant(m, Polynomial(spec), one_poly(spec));
}

Polynomial frobenius_factor(std::uint64_t n, const Polynomial& p) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "Frobenius index must be positive");
    require_constant_one(p, "factor");
    const RingSpec& spec = p.spec();
    if (n == 1 || is_one_poly(p)) return p;
    // det(I - t C^n) = sum_k c_k t^k where det(x I - C^n) = sum_k c_k x^(d-k).
    const Matrix<RingElement> cn = matrix_power(companion_of_reversed(p), n, spec);
    std::vector<RingElement> coeffs = berkowitz_charpoly(cn, RingElement::zero(spec), RingElement::one(spec));
    return unit_constant(Polynomial(spec, std::move(coeffs)));
}

WittVector witt_add(const WittVector& f, const WittVector& g) {
    require_same_spec(f.spec(), g.spec(), "witt_add");
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    return {f.numerator() * g.numerator(), f.denominator() * g.denominator()};
}

WittVector witt_neg(const WittVector& f) { return {f.denominator(), f.numerator()}; }

WittVector witt_sub(const WittVector& f, const WittVector& g) { return witt_add(f, witt_neg(g)); }

WittVector witt_mul(const WittVector& f, const WittVector& g) {
    require_same_spec(f.spec(), g.spec(), "witt_mul");
    const Polynomial& n1 = f.numerator();
    const Polynomial& d1 = f.denominator();
    const Polynomial& n2 = g.numerator();
    const Polynomial& d2 = g.denominator();
    return {otimes_factor(n1, n2) * otimes_factor(d1, d2), otimes_factor(n1, d2) * otimes_factor(d1, n2)};
}

WittVector frobenius(std::uint64_t n, const WittVector& f) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "Frobenius index must be positive");
    if (n == 1) return f;
    return {frobenius_factor(n, f.numerator()), frobenius_factor(n, f.denominator())};
}

WittVector teichmuller(const RingElement& a) {
    const RingSpec& spec = a.spec();
    return WittVector(Polynomial(spec, {RingElement::one(spec), -a}));
}

RingElement split_counit(const WittVector& f) { return f.denominator().coeff(1) - f.numerator().coeff(1); }

namespace {

// Power sums s_1..s_N of the inverse roots of p via Newton's identities.
std::vector<RingElement> power_sums(const Polynomial& p, std::size_t n) {
    const RingSpec& spec = p.spec();
    std::vector<RingElement> s(n + 1, RingElement::zero(spec));
    for (std::size_t k = 1; k <= n; ++k) {
        RingElement acc = RingElement(spec, static_cast<long>(k)) * p.coeff(k);
        const std::size_t top = std::min<std::size_t>(k - 1, static_cast<std::size_t>(std::max(p.degree(), 0)));
        for (std::size_t i = 1; i <= top; ++i) acc += p.coeff(i) * s[k - i];
        s[k] = -acc;
    }
    s.erase(s.begin());
    return s;
}

} // namespace

GhostVector ghost(const WittVector& f, std::size_t precision) {
    if (precision == 0) fail(ErrorCode::InvalidArgument, "ghost precision must be positive");
    std::vector<RingElement> a = power_sums(f.numerator(), precision);
    const std::vector<RingElement> b = power_sums(f.denominator(), precision);
    for (std::size_t i = 0; i < precision; ++i) a[i] -= b[i];
    return {std::move(a)};
}

std::size_t default_ghost_precision(const WittVector& f) {
    return static_cast<std::size_t>(2 * (f.numerator().degree() + f.denominator().degree()) + 4);
}

WittVector map_coefficients(const WittVector& f, const RingSpec& target) {
    return {f.numerator().map_to(target), f.denominator().map_to(target)};
}

WittVector conjugate(const WittVector& f, i64 sigma) {
    auto conj = [sigma](const Polynomial& p) {
        std::vector<RingElement> out;
        out.reserve(p.coefficients().size());
        for (const auto& c : p.coefficients()) out.push_back(cyclotomic_conjugate(c, sigma));
        return Polynomial(p.spec(), std::move(out));
    };
    return {conj(f.numerator()), conj(f.denominator())};
}

bool galois_fixed_check(const WittVector& f) {
    const RingSpec& spec = f.spec();
    if (spec.kind() != RingKind::Cyclotomic)
        fail(ErrorCode::SpecMismatch, "galois_fixed_check needs a cyclotomic ring, got " + spec.name());
    const i64 n = spec.level();
    for (i64 sigma = 2; sigma < n; ++sigma) {
        if (nt::gcd(sigma, n) != 1) continue;
        if (!(conjugate(f, sigma) == f)) return false;
    }
    return true;
}

GroupRingElement::GroupRingElement(RingSpec spec, std::vector<Term> terms) : spec_(std::move(spec)) {
    auto less = [](const RingElement& a, const RingElement& b) { return a.compare(b) < 0; };
    std::map<RingElement, long, decltype(less)> merged(less);
    for (auto& t : terms) {
        require_same_spec(spec_, t.base.spec(), "GroupRingElement");
        if (!t.base.is_unit())
            fail(ErrorCode::NotAUnit, "group-ring base " + t.base.to_string() + " is not a unit of " + spec_.name());
        merged[t.base] += t.multiplicity;
    }
    for (auto& [base, mult] : merged)
        if (mult != 0) terms_.push_back({base, mult});
}

std::string GroupRingElement::to_string() const {
    if (terms_.empty()) return "{}";
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) out << ',';
        out << '(' << terms_[i].base.to_string() << ',' << terms_[i].multiplicity << ')';
    }
    out << '}';
    return out.str();
}

WittVector groupring_to_witt(const GroupRingElement& x) {
    const RingSpec& spec = x.spec();
    Polynomial num = one_poly(spec), den = one_poly(spec);
    for (const auto& t : x.terms()) {
        const Polynomial lin(spec, {RingElement::one(spec), -t.base});
        Polynomial& side = t.multiplicity > 0 ? num : den;
        for (long k = 0; k < std::abs(t.multiplicity); ++k) side *= lin;
    }
    return {num, den};
}

namespace {

constexpr i64 kMaxEnumeratedField = 2'000'000;

std::vector<RingElement> field_elements(const RingSpec& field) {
    std::vector<RingElement> out;
    if (field.kind() == RingKind::PrimeField) {
        for (i64 v = 1; v < field.modulus(); ++v) out.push_back(RingElement(field, static_cast<long>(v)));
        return out;
    }
    const i64 p = field.modulus();
    const std::size_t k = field.width();
    std::vector<mpz_class> digits(k, 0);
    while (true) {
        std::size_t i = 0;
        while (i < k && digits[i] == p - 1) digits[i++] = 0;
        if (i == k) break;
        digits[i] += 1;
        out.push_back(RingElement::from_coefficients(field, digits));
    }
    return out;
}

// Inverse roots of p with multiplicity if p splits completely over the field.
bool split_inverse_roots(const Polynomial& p, const std::vector<RingElement>& candidates,
                         std::vector<std::pair<RingElement, long>>& out) {
    Polynomial rest = p.reversed();
    const RingSpec& spec = rest.spec();
    for (const auto& a : candidates) {
        if (rest.degree() <= 0) break;
        long mult = 0;
        while (rest.degree() > 0 && rest.evaluate(a).is_zero()) {
            rest = divmod(rest, Polynomial(spec, {-a, RingElement::one(spec)})).quotient;
            ++mult;
        }
        if (mult > 0) out.emplace_back(a, mult);
    }
    return rest.degree() <= 0;
}

} // namespace

GroupRingElement witt_to_groupring(const WittVector& f, int splitting_degree_bound) {
    const RingSpec& base = f.spec();
    if (base.kind() != RingKind::PrimeField)
        fail(ErrorCode::SpecMismatch, "witt_to_groupring needs a prime field, got " + base.name());
    if (splitting_degree_bound < 1) fail(ErrorCode::InvalidArgument, "splitting degree bound must be positive");
    const i64 p = base.modulus();
    for (int k = 1; k <= splitting_degree_bound; ++k) {
        const double size = std::pow(static_cast<double>(p), k);
        if (size > static_cast<double>(kMaxEnumeratedField))
            fail(ErrorCode::InvalidArgument, "F_" + std::to_string(p) + "^" + std::to_string(k) +
                                                 " is too large for exhaustive root search");
        const RingSpec field = k == 1 ? base : RingSpec::galois_field(p, k);
        const Polynomial num = f.numerator().map_to(field), den = f.denominator().map_to(field);
        const std::vector<RingElement> candidates = field_elements(field);
        std::vector<std::pair<RingElement, long>> roots_num, roots_den;
        if (!split_inverse_roots(num, candidates, roots_num) || !split_inverse_roots(den, candidates, roots_den))
            continue;
        std::vector<GroupRingElement::Term> terms;
        for (auto& [a, m] : roots_num) terms.push_back({a, m});
        for (auto& [a, m] : roots_den) terms.push_back({a, -m});
        return GroupRingElement(field, std::move(terms));
    }
    fail(ErrorCode::NotSplit, "numerator or denominator of " + f.to_string() + " does not split over F_" +
                                  std::to_string(p) + "^k for k <= " + std::to_string(splitting_degree_bound));
}

} // namespace wittcft
