#include "wittcft/verify.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "wittcft/bridge.hpp"
#include "wittcft/wittring.hpp"

namespace wittcft {

namespace {

constexpr std::size_t kMaxFailureSamples = 5;

struct Tally {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> samples;

    void check(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        ++failures;
        if (samples.size() < kMaxFailureSamples) samples.push_back(what);
    }
    void merge(const Tally& o) {
        checks += o.checks;
        failures += o.failures;
        for (const auto& s : o.samples)
            if (samples.size() < kMaxFailureSamples) samples.push_back(s);
    }
};

// Runs the body, turning a library error into one failed check.
Tally guarded(const std::string& label, const std::function<void(Tally&)>& body) {
    Tally t;
    try {
        body(t);
    } catch (const Error& e) {
        t.check(false, label + ": " + error_name(e.code()) + ": " + e.what());
    }
    return t;
}

Tally run_cases(std::size_t count, unsigned jobs, const std::function<Tally(std::size_t)>& fn) {
    Tally total;
    for (const Tally& t : parallel_map<Tally>(count, jobs, fn)) total.merge(t);
    return total;
}

long draw(std::mt19937_64& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

Polynomial random_unit_poly(std::mt19937_64& g, const RingSpec& spec, int max_degree, long bound,
                            bool rational_only = false) {
    const int d = static_cast<int>(draw(g, 0, max_degree));
    std::vector<RingElement> c{RingElement::one(spec)};
    for (int i = 0; i < d; ++i) {
        if (spec.kind() == RingKind::Cyclotomic && !rational_only) {
            std::vector<mpz_class> v;
            for (std::size_t j = 0; j < spec.width(); ++j) v.emplace_back(draw(g, -bound, bound));
            c.push_back(RingElement::from_coefficients(spec, v));
        } else {
            c.emplace_back(spec, draw(g, -bound, bound));
        }
    }
    return Polynomial(spec, c);
}

WittVector random_witt(std::mt19937_64& g, const RingSpec& spec, int max_degree, long bound,
                       bool rational_only = false) {
    return WittVector(random_unit_poly(g, spec, max_degree, bound, rational_only),
                      random_unit_poly(g, spec, max_degree, bound, rational_only));
}

bool ghost_sum(const GhostVector& a, const GhostVector& b, const GhostVector& s) {
    for (std::size_t k = 0; k < s.precision(); ++k)
        if (!(s.components[k] == a.components[k] + b.components[k])) return false;
    return true;
}

bool ghost_product(const GhostVector& a, const GhostVector& b, const GhostVector& s) {
    for (std::size_t k = 0; k < s.precision(); ++k)
        if (!(s.components[k] == a.components[k] * b.components[k])) return false;
    return true;
}

std::string show(const WittVector& f) { return f.to_string(); }

// Criterion 1.
Tally witt_ring_laws(const VerifyConfig& c) {
    const RingSpec z = RingSpec::integers();
    const std::size_t n = static_cast<std::size_t>(c.ghost_precision);
    return run_cases(static_cast<std::size_t>(c.witt_samples), c.jobs, [&](std::size_t i) {
        return guarded("sample " + std::to_string(i), [&](Tally& t) {
            auto g = case_rng(c.seed, 1, i);
            const WittVector f = random_witt(g, z, 4, 9), h = random_witt(g, z, 4, 9), k = random_witt(g, z, 4, 9);
            const std::uint64_t fn = static_cast<std::uint64_t>(draw(g, 2, 3));
            const std::string tag = " on f=" + show(f) + " g=" + show(h) + " h=" + show(k);

            const WittVector sum = witt_add(f, h), prod = witt_mul(f, h);
            const WittVector prod_gk = witt_mul(h, k);
            const WittVector left = witt_mul(prod, k), right = witt_mul(f, prod_gk);
            const WittVector dist_l = witt_mul(f, witt_add(h, k)), dist_r = witt_add(prod, witt_mul(f, k));
            t.check(sum == witt_add(h, f), "add commutativity" + tag);
            t.check(prod == witt_mul(h, f), "mul commutativity" + tag);
            t.check(witt_add(sum, k) == witt_add(f, witt_add(h, k)), "add associativity" + tag);
            t.check(left == right, "mul associativity" + tag);
            t.check(dist_l == dist_r, "distributivity" + tag);
            const WittVector ff = frobenius(fn, f), fh = frobenius(fn, h);
            t.check(frobenius(fn, sum) == witt_add(ff, fh), "F_n additivity" + tag);
            t.check(frobenius(fn, prod) == witt_mul(ff, fh), "F_n multiplicativity" + tag);

            const GhostVector gf = ghost(f, n), gh = ghost(h, n), gk = ghost(k, n);
            t.check(ghost_sum(gf, gh, ghost(sum, n)), "ghost of sum" + tag);
            t.check(ghost_product(gf, gh, ghost(prod, n)), "ghost of product" + tag);
            const GhostVector gl = ghost(left, n), gr = ghost(right, n);
            t.check(ghost_product(ghost(prod, n), gk, gl) && gl == gr, "ghost associativity" + tag);
            t.check(ghost(dist_l, n) == ghost(dist_r, n) &&
                        ghost_sum(ghost(prod, n), ghost(witt_mul(f, k), n), ghost(dist_l, n)),
                    "ghost distributivity" + tag);
            const GhostVector gfrob = ghost(ff, n), glong = ghost(f, n * fn);
            bool frob_ok = true;
            for (std::size_t j = 1; j <= n; ++j)
                if (!(gfrob.components[j - 1] == glong.components[fn * j - 1])) frob_ok = false;
            t.check(frob_ok, "ghost_k(F_n f) = ghost_nk(f)" + tag);
        });
    });
}

// Criterion 2.
Tally teichmuller_split(const VerifyConfig& c) {
    const RingSpec z = RingSpec::integers();
    Tally total = guarded("teichmuller grid", [&](Tally& t) {
        for (long a = -5; a <= 5; ++a) {
            const RingElement ra(z, a);
            t.check(split_counit(teichmuller(ra)) == ra, "split([" + std::to_string(a) + "])");
            for (long b = -5; b <= 5; ++b)
                t.check(witt_mul(teichmuller(ra), teichmuller(RingElement(z, b))) == teichmuller(RingElement(z, a * b)),
                        "[" + std::to_string(a) + "][" + std::to_string(b) + "]");
        }
    });
    total.merge(run_cases(static_cast<std::size_t>(c.witt_samples), c.jobs, [&](std::size_t i) {
        return guarded("sample " + std::to_string(i), [&](Tally& t) {
            auto g = case_rng(c.seed, 1, i);
            const WittVector f = random_witt(g, z, 4, 9), h = random_witt(g, z, 4, 9);
            const RingElement sf = split_counit(f), sh = split_counit(h);
            t.check(split_counit(witt_add(f, h)) == sf + sh, "split additive on " + show(f) + ", " + show(h));
            t.check(split_counit(witt_mul(f, h)) == sf * sh, "split multiplicative on " + show(f) + ", " + show(h));
        });
    }));
    return total;
}

// Criterion 3.
Tally descent(const VerifyConfig& c) {
    Tally total;
    for (i64 n : {3, 4, 5}) {
        const RingSpec spec = RingSpec::cyclotomic(n);
        const auto units = unit_group(n);
        total.merge(run_cases(static_cast<std::size_t>(c.descent_samples), c.jobs, [&](std::size_t i) {
            return guarded("n=" + std::to_string(n) + " sample " + std::to_string(i), [&](Tally& t) {
                auto g = case_rng(c.seed, 3, static_cast<std::uint64_t>(n) * 100000 + i);
                const bool rational = draw(g, 0, 1) == 0;
                const WittVector f = random_witt(g, spec, 3, 3, rational);
                t.check(galois_fixed_check(f) == f.has_rational_integer_coefficients(),
                        "descent on " + show(f) + " over " + spec.name());
                const WittVector base = random_witt(g, spec, 2, 2);
                WittVector orbit = WittVector::zero(spec);
                for (i64 s : units) orbit = witt_add(orbit, conjugate(base, s));
                t.check(galois_fixed_check(orbit) && orbit.has_rational_integer_coefficients(),
                        "orbit sum of " + show(base) + " over " + spec.name());
            });
        }));
    }
    return total;
}

// Criterion 4.
Tally splitting(const VerifyConfig& c) {
    const auto primes = nt::primes_below(c.max_prime);
    return run_cases(static_cast<std::size_t>(c.cyclotomic_bound), c.jobs, [&](std::size_t i) {
        const i64 n = static_cast<i64>(i) + 1;
        return guarded("n=" + std::to_string(n), [&](Tally& t) {
            const AbelianField f = AbelianField::cyclotomic(n);
            for (i64 p : primes) {
                if (n % p == 0) continue;
                const SplitData s = split_invariants(f, p);
                const FactorDegrees d = cyclotomic_factor_degrees(n, p);
                const std::string tag = " for n=" + std::to_string(n) + ", p=" + std::to_string(p);
                t.check(s.residue_degree == d.degree && s.num_primes == d.count && d.equal_degree(),
                        "split invariants vs factorization" + tag);
                t.check(s.residue_degree * s.num_primes == nt::euler_phi(n), "f r = phi(n)" + tag);
            }
        });
    });
}

// Criterion 5.
Tally reciprocity(const VerifyConfig& c) {
    std::vector<std::pair<i64, i64>> pairs;
    const auto primes = nt::primes_below(c.reciprocity_bound);
    for (i64 p : primes)
        for (i64 q : primes)
            if (p != 2 && q != 2 && p != q) pairs.emplace_back(p, q);
    return run_cases(pairs.size(), c.jobs, [&](std::size_t i) {
        const auto [p, q] = pairs[i];
        const std::string tag = "(p, q) = (" + std::to_string(p) + ", " + std::to_string(q) + ")";
        return guarded(tag, [&](Tally& t) {
            const ReciprocityRow row = reciprocity_row(p, q);
            t.check(row.agree(), "reciprocity row " + tag);
        });
    });
}

struct FieldCase {
    i64 n;
    std::vector<i64> subgroup;
};

std::vector<FieldCase> subfield_grid(i64 bound) {
    std::vector<FieldCase> out;
    for (i64 n = 1; n <= bound; ++n)
        for (auto& h : all_subgroups(n)) out.push_back({n, std::move(h)});
    return out;
}

// Criterion 6.
Tally bridge_grid(const VerifyConfig& c) {
    const auto fields = subfield_grid(c.cyclotomic_bound);
    const auto primes = nt::primes_below(c.max_prime);
    return run_cases(fields.size(), c.jobs, [&](std::size_t i) {
        const AbelianField f(fields[i].n, fields[i].subgroup);
        return guarded(f.label() + " at level " + std::to_string(f.level()), [&](Tally& t) {
            const i64 cond = f.conductor();
            for (i64 p : primes) {
                if (is_ramified(f, p)) continue;
                for (i64 m : {cond, 2 * cond, 3 * cond}) {
                    if (m % p == 0) continue;
                    const BridgeReport r = bridge_compare(f, p, m);
                    t.check(r.match(), "bridge " + f.label() + " (level " + std::to_string(f.level()) +
                                           "), p=" + std::to_string(p) + ", m=" + std::to_string(m));
                }
            }
        });
    });
}

// Criterion 7.
Tally equivariance(const VerifyConfig& c) {
    static const std::vector<i64> primes{2, 3, 5, 7, 11, 13, 17, 19, 23};
    auto random_point = [](std::mt19937_64& g, i64& m) {
        const i64 p = primes[static_cast<std::size_t>(draw(g, 0, static_cast<long>(primes.size()) - 1))];
        m = draw(g, 1, 120);
        while (m % p == 0) ++m;
        const auto units = unit_group(m);
        const i64 a = units[static_cast<std::size_t>(draw(g, 0, static_cast<long>(units.size()) - 1))];
        long n = draw(g, 1, 10000);
        while (n % p == 0) ++n;
        return make_point(p, a, m, mpz_class(n), static_cast<int>(draw(g, 1, 3)));
    };
    Tally total = run_cases(static_cast<std::size_t>(c.equivariance_samples), c.jobs, [&](std::size_t i) {
        return guarded("sample " + std::to_string(i), [&](Tally& t) {
            auto g = case_rng(c.seed, 7, i);
            i64 m = 1;
            const DeningerPointFL x = random_point(g, m);
            const std::string tag = " at (p=" + std::to_string(x.prime) + ", a=" + x.unit.to_string() +
                                    ", n=" + x.scale.get_str() + ")";
            long k = draw(g, 1, 500);
            while (k % x.prime == 0) ++k;
            t.check(check_frobenius_equivariance(x, k), "Frobenius equivariance, k=" + std::to_string(k) + tag);
            const auto units = unit_group(m);
            const i64 sigma = units[static_cast<std::size_t>(draw(g, 0, static_cast<long>(units.size()) - 1))];
            t.check(check_galois_equivariance(x, sigma), "Galois equivariance, sigma=" + std::to_string(sigma) + tag);
            const mpq_class flow(draw(g, 1, 5000), draw(g, 1, 5000)), r(draw(g, 1, 100), draw(g, 1, 100));
            t.check(check_anti_equivariance(x, flow, r), "anti-equivariance, t=" + flow.get_str() + tag);
        });
    });
    const auto fields = subfield_grid(std::min<i64>(c.cyclotomic_bound, 24));
    total.merge(run_cases(fields.size(), c.jobs, [&](std::size_t i) {
        const AbelianField f(fields[i].n, fields[i].subgroup);
        return guarded("level reduction for " + f.label(), [&](Tally& t) {
            const i64 cond = f.conductor();
            for (i64 p : {2, 3, 5, 7, 11, 13}) {
                if (is_ramified(f, p)) continue;
                for (i64 mult : {2, 3, 4, 6}) {
                    const i64 m = cond * mult;
                    if (m % p == 0) continue;
                    for (i64 d : nt::divisors(mult))
                        t.check(check_level_reduction(f, p, m, cond * d),
                                "level " + std::to_string(m) + " -> " + std::to_string(cond * d) + " for " + f.label() +
                                    ", p=" + std::to_string(p));
                }
            }
        });
    }));
    return total;
}

// Criterion 8.
Tally roundtrip(const VerifyConfig& c) {
    Tally total;
    for (i64 p : {5, 7, 11}) {
        const RingSpec fp = RingSpec::prime_field(p);
        total.merge(run_cases(static_cast<std::size_t>(c.roundtrip_samples), c.jobs, [&](std::size_t i) {
            return guarded("p=" + std::to_string(p) + " sample " + std::to_string(i), [&](Tally& t) {
                auto g = case_rng(c.seed, 8, static_cast<std::uint64_t>(p) * 100000 + i);
                std::vector<GroupRingElement::Term> terms;
                for (long j = draw(g, 0, 6); j > 0; --j)
                    terms.push_back({RingElement(fp, draw(g, 1, p - 1)), draw(g, -3, 3)});
                const GroupRingElement x(fp, terms);
                t.check(witt_to_groupring(groupring_to_witt(x), 1) == x, "roundtrip of " + x.to_string());
            });
        }));
    }
    return total;
}

struct SuiteSpec {
    const char* name;
    double limit_seconds;
    Tally (*run)(const VerifyConfig&);
};

const std::vector<SuiteSpec>& suites() {
    static const std::vector<SuiteSpec> table{
        {"witt ring laws", 30, witt_ring_laws},
        {"teichmuller and split counit", 0, teichmuller_split},
        {"galois descent", 0, descent},
        {"splitting double oracle", 20, splitting},
        {"quadratic reciprocity table", 60, reciprocity},
        {"bridge fiber comparison", 120, bridge_grid},
        {"bridge equivariance", 0, equivariance},
        {"group ring roundtrip", 0, roundtrip},
    };
    return table;
}

} // namespace

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t suite, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(suite), static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

std::string SuiteResult::summary_line() const {
    std::ostringstream os;
    os << "criterion " << id << " [" << name << "]: " << (passed ? "PASS" : "FAIL") << " (" << cases << " cases, "
       << failures << " failures, " << std::fixed << std::setprecision(2) << seconds << " s";
    if (limit_seconds > 0) os << (within_limit() ? " < " : " >= ") << std::setprecision(0) << limit_seconds << " s";
    os << ")";
    return os.str();
}

int suite_count() { return static_cast<int>(suites().size()); }

SuiteResult run_suite(int id, const VerifyConfig& config) {
    if (id < 1 || id > suite_count()) fail(ErrorCode::InvalidArgument, "no acceptance suite " + std::to_string(id));
    const SuiteSpec& spec = suites()[static_cast<std::size_t>(id - 1)];
    const auto start = std::chrono::steady_clock::now();
    const Tally t = spec.run(config);
    const auto stop = std::chrono::steady_clock::now();
    SuiteResult r;
    r.id = id;
    r.name = spec.name;
    r.cases = t.checks;
    r.failures = t.failures;
    r.failure_samples = t.samples;
    r.seconds = std::chrono::duration<double>(stop - start).count();
    r.limit_seconds = spec.limit_seconds;
    r.passed = t.checks > 0 && t.failures == 0 && r.within_limit();
    return r;
}

std::vector<SuiteResult> run_all_suites(const VerifyConfig& config) {
    std::vector<SuiteResult> out;
    for (int id = 1; id <= suite_count(); ++id) out.push_back(run_suite(id, config));
    return out;
}

} // namespace wittcft
