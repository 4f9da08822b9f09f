#include "wittcft/polynomial.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "wittcft/matrix.hpp"
#include "wittcft/numtheory.hpp"

namespace wittcft {

Polynomial::Polynomial(RingSpec spec, std::vector<RingElement> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) require_same_spec(spec_, c.spec(), "Polynomial");
    trim();
}

Polynomial Polynomial::from_integers(const RingSpec& spec, std::initializer_list<long> coeffs) {
    std::vector<RingElement> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(spec, v);
    return Polynomial(spec, std::move(c));
}

Polynomial Polynomial::from_integers(const RingSpec& spec, const std::vector<mpz_class>& coeffs) {
    std::vector<RingElement> c;
    c.reserve(coeffs.size());
    for (const auto& v : coeffs) c.push_back(RingElement::from_integer(spec, v));
    return Polynomial(spec, std::move(c));
}

Polynomial Polynomial::constant(const RingElement& c) { return Polynomial(c.spec(), {c}); }

Polynomial Polynomial::monomial(const RingElement& c, std::size_t k) {
    std::vector<RingElement> v(k + 1, RingElement::zero(c.spec()));
    v[k] = c;
    return Polynomial(c.spec(), std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RingElement Polynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : RingElement::zero(spec_);
}

const RingElement& Polynomial::leading() const {
    if (coeffs_.empty()) fail(ErrorCode::InvalidArgument, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

RingElement Polynomial::evaluate(const RingElement& x) const {
    require_same_spec(spec_, x.spec(), "evaluate");
    RingElement acc = RingElement::zero(spec_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    std::vector<RingElement> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out.push_back(coeffs_[i] * RingElement(spec_, static_cast<long>(i)));
    return Polynomial(spec_, std::move(out));
}

Polynomial Polynomial::reversed(std::size_t d) const {
    if (degree() > static_cast<int>(d)) fail(ErrorCode::InvalidArgument, "reversed: degree exceeds d");
    std::vector<RingElement> out(d + 1, RingElement::zero(spec_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[d - i] = coeffs_[i];
    return Polynomial(spec_, std::move(out));
}

Polynomial Polynomial::truncated(std::size_t n) const {
    std::vector<RingElement> out(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(n, coeffs_.size())));
    return Polynomial(spec_, std::move(out));
}

Polynomial Polynomial::scaled_argument(const RingElement& c) const {
    std::vector<RingElement> out;
    RingElement power = RingElement::one(spec_);
    for (const auto& a : coeffs_) {
        out.push_back(a * power);
        power *= c;
    }
    return Polynomial(spec_, std::move(out));
}

Polynomial Polynomial::map_to(const RingSpec& target) const {
    std::vector<RingElement> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.map_to(target));
    return Polynomial(target, std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<RingElement> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(-c);
    return Polynomial(spec_, std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_spec(spec_, o.spec_, "poly add");
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), RingElement::zero(spec_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_spec(spec_, o.spec_, "poly sub");
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), RingElement::zero(spec_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_spec(a.spec_, b.spec_, "poly mul");
    if (a.is_zero() || b.is_zero()) return Polynomial(a.spec_);
    if (a.spec_.kind() == RingKind::Integers) {
        // Hot path for the integer Witt computations: stay on raw mpz values.
        std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            const mpz_class& x = a.coeffs_[i].integer();
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                mpz_addmul(out[i + j].get_mpz_t(), x.get_mpz_t(), b.coeffs_[j].integer().get_mpz_t());
        }
        return Polynomial::from_integers(a.spec_, out);
    }
    std::vector<RingElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, RingElement::zero(a.spec_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(a.spec_, std::move(out));
}

Polynomial operator*(const Polynomial& a, const RingElement& c) {
    std::vector<RingElement> out;
    out.reserve(a.coeffs_.size());
    for (const auto& x : a.coeffs_) out.push_back(x * c);
    return Polynomial(a.spec_, std::move(out));
}

std::string Polynomial::to_string(std::string_view var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const RingElement& c = coeffs_[i];
        if (c.is_zero()) continue;
        std::string s = c.to_string();
        const bool scalar = !c.spec().uses_vector_payload() && c.spec().kind() != RingKind::CyclotomicField;
        bool negative = false;
        if (scalar && !s.empty() && s[0] == '-') {
            negative = true;
            s.erase(0, 1);
        } else if (!scalar && s.find_first_of("+-", 1) != std::string::npos) {
            s = "(" + s + ")";
        } else if (!scalar && s[0] == '-') {
            negative = true;
            s.erase(0, 1);
        }
        if (negative) out << '-';
        else if (!first) out << '+';
        if (i == 0) {
            out << s;
        } else {
            if (s != "1") out << s;
            out << var;
            if (i > 1) out << '^' << i;
        }
        first = false;
    }
    return out.str();
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

DivMod divmod(const Polynomial& a, const Polynomial& b) {
    require_same_spec(a.spec(), b.spec(), "divmod");
    if (b.is_zero()) fail(ErrorCode::InvalidArgument, "divmod by the zero polynomial");
    const RingSpec& spec = a.spec();
    const RingElement inv = b.leading().inverse();
    std::vector<RingElement> rem = a.coefficients();
    const int db = b.degree();
    const int da = a.degree();
    std::vector<RingElement> quo(static_cast<std::size_t>(std::max(da - db + 1, 0)), RingElement::zero(spec));
    for (int i = da; i >= db; --i) {
        const RingElement c = rem[static_cast<std::size_t>(i)] * inv;
        if (c.is_zero()) continue;
        quo[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= c * b.coefficients()[static_cast<std::size_t>(j)];
    }
    return {Polynomial(spec, std::move(quo)), Polynomial(spec, std::move(rem))};
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
    require_same_spec(a.spec(), b.spec(), "pseudo_remainder");
    if (b.is_zero()) fail(ErrorCode::InvalidArgument, "pseudo_remainder by the zero polynomial");
    const int db = b.degree();
    if (a.degree() < db) return a;
    const RingElement& lb = b.leading();
    int e = a.degree() - db + 1;
    Polynomial r = a;
    while (!r.is_zero() && r.degree() >= db) {
        Polynomial term = Polynomial::monomial(r.leading(), static_cast<std::size_t>(r.degree() - db)) * b;
        r = r * lb - term;
        --e;
    }
    return r * lb.pow(static_cast<std::uint64_t>(e));
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    require_same_spec(a.spec(), b.spec(), "exact_quotient");
    if (b.is_zero()) fail(ErrorCode::InvalidArgument, "exact_quotient by the zero polynomial");
    const RingSpec& spec = a.spec();
    std::vector<RingElement> rem = a.coefficients();
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) {
        if (a.is_zero()) return Polynomial(spec);
        fail(ErrorCode::InvalidArgument, "exact_quotient: not divisible");
    }
    std::vector<RingElement> quo(static_cast<std::size_t>(da - db + 1), RingElement::zero(spec));
    for (int i = da; i >= db; --i) {
        if (rem[static_cast<std::size_t>(i)].is_zero()) continue;
        const RingElement c = rem[static_cast<std::size_t>(i)].exact_divide(b.leading());
        quo[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= c * b.coefficients()[static_cast<std::size_t>(j)];
    }
    for (const auto& r : rem)
        if (!r.is_zero()) fail(ErrorCode::InvalidArgument, "exact_quotient: not divisible");
    return Polynomial(spec, std::move(quo));
}

Polynomial make_monic(const Polynomial& f) {
    if (f.is_zero()) return f;
    return f * f.leading().inverse();
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
    require_same_spec(f.spec(), g.spec(), "poly_gcd");
    if (!f.spec().is_field()) fail(ErrorCode::InvalidArgument, "poly_gcd needs a field, got " + f.spec().name());
    Polynomial a = f, b = g;
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

namespace {

mpz_class content(const Polynomial& f) {
    mpz_class c = 0;
    for (const auto& a : f.coefficients()) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), a.integer().get_mpz_t());
    return c;
}

Polynomial primitive_part(const Polynomial& f) {
    if (f.is_zero()) return f;
    mpz_class c = content(f);
    if (f.leading().integer() < 0) c = -c;
    std::vector<mpz_class> out;
    for (const auto& a : f.coefficients()) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), a.integer().get_mpz_t(), c.get_mpz_t());
        out.push_back(q);
    }
    return Polynomial::from_integers(f.spec(), out);
}

} // namespace

Polynomial integer_poly_gcd(const Polynomial& f, const Polynomial& g) {
    require_same_spec(f.spec(), g.spec(), "integer_poly_gcd");
    if (f.spec().kind() != RingKind::Integers) fail(ErrorCode::InvalidArgument, "integer_poly_gcd needs Z");
    if (f.is_zero()) return primitive_part(g) * RingElement::from_integer(g.spec(), content(g));
    if (g.is_zero()) return primitive_part(f) * RingElement::from_integer(f.spec(), content(f));
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), content(f).get_mpz_t(), content(g).get_mpz_t());
    Polynomial a = primitive_part(f), b = primitive_part(g);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Polynomial r = pseudo_remainder(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    return primitive_part(a) * RingElement::from_integer(f.spec(), c);
}

ExtendedGcd ext_gcd(const Polynomial& f, const Polynomial& g) {
    require_same_spec(f.spec(), g.spec(), "ext_gcd");
    if (!f.spec().is_field()) fail(ErrorCode::InvalidArgument, "ext_gcd needs a field, got " + f.spec().name());
    const RingSpec& spec = f.spec();
    Polynomial r0 = f, r1 = g;
    Polynomial s0 = Polynomial::constant(RingElement::one(spec)), s1(spec);
    Polynomial t0(spec), t1 = Polynomial::constant(RingElement::one(spec));
    while (!r1.is_zero()) {
        DivMod qr = divmod(r0, r1);
        Polynomial s2 = s0 - qr.quotient * s1;
        Polynomial t2 = t0 - qr.quotient * t1;
        r0 = std::move(r1);
        r1 = std::move(qr.remainder);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const RingElement inv = r0.leading().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

Polynomial powmod(const Polynomial& base, const mpz_class& exp, const Polynomial& modulus) {
    Polynomial result = divmod(Polynomial::constant(RingElement::one(base.spec())), modulus).remainder;
    Polynomial b = divmod(base, modulus).remainder;
    const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = divmod(result * result, modulus).remainder;
        if (mpz_tstbit(exp.get_mpz_t(), i)) result = divmod(result * b, modulus).remainder;
    }
    return result;
}

RingElement resultant_sylvester(const Polynomial& f, const Polynomial& g) {
    require_same_spec(f.spec(), g.spec(), "resultant");
    const RingSpec& spec = f.spec();
    if (f.is_zero() && g.is_zero()) fail(ErrorCode::InvalidArgument, "resultant of two zero polynomials");
    if (f.is_zero() || g.is_zero()) return RingElement::zero(spec);
    const auto m = static_cast<std::size_t>(f.degree());
    const auto n = static_cast<std::size_t>(g.degree());
    if (m == 0) return f.leading().pow(n);
    if (n == 0) return g.leading().pow(m);
    const RingElement zero = RingElement::zero(spec);
    Matrix<RingElement> s(m + n, std::vector<RingElement>(m + n, zero));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = f.coefficients()[m - k];
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k <= n; ++k) s[n + j][j + k] = g.coefficients()[n - k];
    return determinant(s, zero, RingElement::one(spec));
}

RingElement resultant_subresultant(const Polynomial& f, const Polynomial& g) {
    require_same_spec(f.spec(), g.spec(), "resultant");
    const RingSpec& spec = f.spec();
    if (!spec.is_domain()) fail(ErrorCode::InvalidArgument, "subresultant PRS needs an integral domain");
    if (f.is_zero() && g.is_zero()) fail(ErrorCode::InvalidArgument, "resultant of two zero polynomials");
    if (f.is_zero() || g.is_zero()) return RingElement::zero(spec);

    Polynomial a = f, b = g;
    RingElement sign = RingElement::one(spec);
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    }
    if (b.degree() == 0) return sign * b.leading().pow(static_cast<std::uint64_t>(a.degree()));

    RingElement gg = RingElement::one(spec);
    RingElement h = RingElement::one(spec);
    while (true) {
        const int delta = a.degree() - b.degree();
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
        Polynomial r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.is_zero()) return RingElement::zero(spec);
        const RingElement divisor = gg * h.pow(static_cast<std::uint64_t>(delta));
        std::vector<RingElement> scaled;
        for (const auto& c : r.coefficients()) scaled.push_back(c.exact_divide(divisor));
        b = Polynomial(spec, std::move(scaled));
        gg = a.leading();
        // h <- h^(1 - delta) g^delta
        if (delta == 0) {
        } else if (delta == 1) {
            h = gg;
        } else {
            h = gg.pow(static_cast<std::uint64_t>(delta)).exact_divide(h.pow(static_cast<std::uint64_t>(delta - 1)));
        }
        if (b.degree() == 0) {
            const auto da = static_cast<std::uint64_t>(a.degree());
            RingElement out = b.leading().pow(da).exact_divide(h.pow(da - 1));
            return sign * out;
        }
    }
}

RingElement poly_resultant(const Polynomial& f, const Polynomial& g) {
    require_same_spec(f.spec(), g.spec(), "resultant");
    if (f.spec().is_domain()) return resultant_subresultant(f, g);
    return resultant_sylvester(f, g);
}

bool is_irreducible_mod_p(const Polynomial& f) {
    const RingSpec& spec = f.spec();
    if (spec.kind() != RingKind::PrimeField) fail(ErrorCode::InvalidArgument, "is_irreducible_mod_p needs F_p");
    const int k = f.degree();
    if (k < 1) return false;
    const Polynomial x = Polynomial::variable(spec);
    const mpz_class p(static_cast<long>(spec.modulus()));
    Polynomial h = x;
    for (int i = 1; i <= k / 2; ++i) {
        h = powmod(h, p, f);
        if (poly_gcd(h - x, f).degree() > 0) return false;
    }
    return true;
}

const std::vector<mpz_class>& irreducible_polynomial(i64 p, int k) {
    static std::shared_mutex mutex;
    static std::map<std::pair<i64, int>, std::vector<mpz_class>> table;
    const auto key = std::pair{p, k};
    {
        std::shared_lock lock(mutex);
        auto it = table.find(key);
        if (it != table.end()) return it->second;
    }
    const RingSpec fp = RingSpec::prime_field(p);
    const double count = std::pow(static_cast<double>(p), k);
    if (count > 1e9) fail(ErrorCode::InvalidArgument, "irreducible search space too large");
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(k) + 1, 0);
    coeffs[static_cast<std::size_t>(k)] = 1;
    // Ordered by sum c_i p^i over the lower coefficients.
    while (true) {
        if (is_irreducible_mod_p(Polynomial::from_integers(fp, coeffs))) break;
        std::size_t i = 0;
        while (i < static_cast<std::size_t>(k)) {
            coeffs[i] += 1;
            if (coeffs[i] < p) break;
            coeffs[i] = 0;
            ++i;
        }
        if (i == static_cast<std::size_t>(k)) fail(ErrorCode::InvalidArgument, "no irreducible polynomial found");
    }
    std::unique_lock lock(mutex);
    return table.try_emplace(key, std::move(coeffs)).first->second;
}

} // namespace wittcft
