#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "output.hpp"
#include "wittcft/parse.hpp"
#include "wittcft/verify.hpp"

using namespace wittcft;
using cli::json;
using cli::Output;

namespace {

struct Globals {
    std::string format = "text";
    std::uint64_t seed = VerifyConfig{}.seed;
    unsigned jobs = 1;
};

struct FieldArgs {
    std::optional<i64> cyclotomic;
    std::optional<std::string> subgroup;
    std::optional<i64> quadratic;

    void add_to(CLI::App* app) {
        app->add_option("--cyclotomic", cyclotomic, "Q(mu_n), or a subfield with --subgroup");
        app->add_option("--subgroup", subgroup, "generators of H in (Z/nZ)^x, e.g. \"4\" or \"3,5\"");
        app->add_option("--quadratic", quadratic, "Q(sqrt q) for an odd prime q");
    }
    bool given() const { return cyclotomic || quadratic; }
    json to_json() const {
        json j = json::object();
        if (cyclotomic) j["cyclotomic"] = *cyclotomic;
        if (subgroup) j["subgroup"] = parse_int_list(*subgroup);
        if (quadratic) j["quadratic"] = *quadratic;
        return j;
    }
    AbelianField build() const {
        if (cyclotomic && quadratic) throw CLI::ValidationError("--cyclotomic and --quadratic are exclusive");
        if (subgroup && !cyclotomic) throw CLI::ValidationError("--subgroup needs --cyclotomic");
        if (quadratic) return AbelianField::quadratic(*quadratic);
        if (cyclotomic) {
            if (*cyclotomic < 1) throw CLI::ValidationError("--cyclotomic must be positive");
            if (!subgroup) return AbelianField::cyclotomic(*cyclotomic);
            return AbelianField::from_generators(*cyclotomic, parse_int_list(*subgroup));
        }
        return AbelianField::rationals();
    }
};

json field_json(const AbelianField& f) {
    return {{"label", f.label()}, {"level", f.level()}, {"subgroup", f.subgroup()}, {"conductor", f.conductor()},
            {"degree", f.degree()}};
}

std::vector<i64> coset_members(const UnitQuotient& g, const std::vector<std::size_t>& idx) {
    std::vector<i64> out;
    for (std::size_t i : idx) out.push_back(g.representative(i));
    return out;
}

// ---- witt ----

struct WittArgs {
    std::string ring = "Z";
    std::vector<std::string> operands;
    std::string op;
    std::size_t precision = 0;
    std::uint64_t n = 1;
};

json witt_json(const WittVector& f) {
    return {{"numerator", cli::coefficients(f.numerator())}, {"denominator", cli::coefficients(f.denominator())}};
}

void cmd_witt(Output& out, const WittArgs& a) {
    out.command = "witt " + a.op;
    out.config = {{"ring", a.ring}, {"operands", a.operands}};
    const RingSpec spec = parse_ring(a.ring);
    auto operand = [&](std::size_t i) {
        if (i >= a.operands.size()) throw CLI::ValidationError("witt " + a.op + " needs more operands");
        return parse_witt(a.operands[i], spec);
    };
    auto need = [&](std::size_t k) {
        if (a.operands.size() != k)
            throw CLI::ValidationError("witt " + a.op + " takes " + std::to_string(k) + " operand(s)");
    };
    out.report["operation"] = a.op;
    out.report["ring"] = spec.name();
    std::string result;
    if (a.op == "add" || a.op == "mul") {
        need(2);
        const WittVector f = operand(0), g = operand(1);
        const WittVector r = a.op == "add" ? witt_add(f, g) : witt_mul(f, g);
        result = r.to_string();
        out.report["result"] = result;
        out.report.update(witt_json(r));
    } else if (a.op == "frob") {
        need(1);
        out.config["n"] = a.n;
        const WittVector r = frobenius(a.n, operand(0));
        result = r.to_string();
        out.report["n"] = a.n;
        out.report["result"] = result;
        out.report.update(witt_json(r));
    } else if (a.op == "ghost") {
        need(1);
        const WittVector f = operand(0);
        const std::size_t n = a.precision ? a.precision : default_ghost_precision(f);
        out.config["N"] = n;
        const GhostVector g = ghost(f, n);
        std::vector<std::string> parts;
        json comps = json::array();
        for (const auto& c : g.components) {
            parts.push_back(c.to_string());
            comps.push_back(cli::exact(c));
        }
        result = cli::join(parts, " ");
        out.report["components"] = comps;
        out.report["result"] = result;
    } else if (a.op == "teich") {
        need(1);
        const Polynomial c = parse_polynomial(a.operands[0], spec);
        if (c.degree() > 0) throw CLI::ValidationError("teich takes a constant");
        const WittVector r = teichmuller(c.constant_term());
        result = r.to_string();
        out.report["result"] = result;
        out.report.update(witt_json(r));
    } else if (a.op == "split") {
        need(1);
        const RingElement r = split_counit(operand(0));
        result = r.to_string();
        out.report["result"] = cli::exact(r);
    }
    out.text = result;
    out.csv_header = {"operation", "ring", "result"};
    out.csv_rows = {{a.op, spec.name(), result}};
}

// ---- field ----

void cmd_field(Output& out, const std::string& op, const FieldArgs& fa, std::optional<i64> prime) {
    out.command = "field " + op;
    out.config = {{"field", fa.to_json()}};
    if (prime) out.config["prime"] = *prime;
    const AbelianField f = fa.build();
    out.report["field"] = field_json(f);
    if (op == "split") {
        if (!prime) throw CLI::ValidationError("field split needs --prime");
        const SplitData s = split_invariants(f, *prime);
        out.report["prime"] = s.prime;
        out.report["residue_degree"] = s.residue_degree;
        out.report["num_primes"] = s.num_primes;
        out.report["artin_class"] = s.artin_class.representative;
        out.report["artin_coset"] = s.artin_coset;
        out.report["norm"] = cli::exact(s.norm);
        std::ostringstream os;
        os << f.label() << ", p=" << s.prime << ": f=" << s.residue_degree << " r=" << s.num_primes
           << " artin=" << s.artin_class.representative << "H norm=" << s.norm.get_str();
        out.text = os.str();
        out.csv_header = {"field", "prime", "residue_degree", "num_primes", "artin_class", "norm"};
        out.csv_rows = {{f.label(), std::to_string(s.prime), std::to_string(s.residue_degree),
                         std::to_string(s.num_primes), std::to_string(s.artin_class.representative), s.norm.get_str()}};
    } else if (op == "conductor") {
        out.report["conductor"] = f.conductor();
        out.text = f.label() + ": conductor=" + std::to_string(f.conductor());
        out.csv_header = {"field", "conductor"};
        out.csv_rows = {{f.label(), std::to_string(f.conductor())}};
    } else {
        const auto a = ramified_set(f), b = ramified_set_by_inertia(f);
        out.report["ramified"] = a;
        out.report["ramified_by_inertia"] = b;
        out.report["routes_agree"] = a == b;
        if (a != b) {
            out.verdict = "mismatch";
            out.exit_code = cli::kMismatch;
        }
        out.text = f.label() + ": R_F=" + cli::brace_list(a) + (a == b ? "" : " (inertia route gives " + cli::brace_list(b) + ")");
        out.csv_header = {"field", "ramified", "ramified_by_inertia"};
        out.csv_rows = {{f.label(), cli::csv_cell(json(a)), cli::csv_cell(json(b))}};
    }
}

// ---- linking ----

void cmd_linking(Output& out, i64 p, i64 m) {
    out.command = "linking";
    out.config = {{"prime", p}, {"level", m}};
    if (!nt::is_prime(p)) fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    const ModUnit lk = linking_hom(p, m);
    out.report = {{"prime", p}, {"level", m}, {"value", lk.value},
                  {"order", nt::multiplicative_order(lk.value, m)}};
    out.text = "lk_" + std::to_string(p) + " mod " + std::to_string(m) + " = " + std::to_string(lk.value) +
               " (order " + std::to_string(nt::multiplicative_order(lk.value, m)) + ")";
    out.csv_header = {"prime", "level", "value"};
    out.csv_rows = {{std::to_string(p), std::to_string(m), std::to_string(lk.value)}};
}

// ---- monodromy ----

void cmd_monodromy(Output& out, const std::string& side, i64 p, i64 m, const FieldArgs& fa) {
    out.command = "monodromy";
    out.config = {{"side", side}, {"prime", p}, {"level", m}, {"field", fa.to_json()}};
    out.has_rows = true;
    std::ostringstream text;
    if (side == "cc") {
        const bool infinite = !fa.given();
        const AbelianField f = infinite ? AbelianField::rationals() : fa.build().at_level(m);
        const MappingTorus t = infinite ? cc_fiber_infinite_level(p, m) : cc_fiber(f, p);
        const FiberDecomposition d = decompose(t);
        text << (infinite ? "(Z/" + std::to_string(m) + ")^x" : "Gal(" + f.label() + "/Q) at level " + std::to_string(m))
             << ", p=" << p << ": monodromy " << t.group().representative(t.monodromy()) << ", r=" << d.count
             << ", f=" << d.covering_degree << (t.closed_orbits() ? "" : ", leaves are not closed") << "\n";
        out.csv_header = {"component", "representative", "members", "size", "length"};
        for (std::size_t i = 0; i < d.components.size(); ++i) {
            const auto members = coset_members(t.group(), d.components[i].members);
            const CircleLength len = d.length();
            out.rows.push_back({{"component", i}, {"representative", members.front()}, {"members", members},
                                {"size", members.size()}, {"length", len.to_string()},
                                {"length_display", cli::display6(len.display_value())},
                                {"closed", t.closed_orbits()}});
            text << "  " << i << "  " << cli::brace_list(members) << "  size " << members.size() << "  "
                 << cli::length_text(len) << "\n";
            out.csv_rows.push_back({std::to_string(i), std::to_string(members.front()), cli::csv_cell(json(members)),
                                    std::to_string(members.size()), len.to_string()});
        }
    } else {
        const AbelianField f = fa.build();
        const MappingTorus t = deninger_packet(f, p, m);
        const auto labels = closed_orbit_labels(p, m);
        text << "packets of " << f.label() << " over p=" << p << " at level " << m << ": (Z/" << m << ")^x / <"
             << p << "^" << t.packet()->residue_degree << ">, " << labels.size() << " label(s)\n";
        out.csv_header = {"label", "prime_index", "galois_label", "members", "size", "length"};
        for (const auto& label : labels) {
            for (const PacketComponent& c : packet_fiber_over_label(t, label)) {
                const auto members = coset_members(t.group(), c.members);
                const i64 g = f.galois_group().representative(c.galois_label);
                out.rows.push_back({{"label", label.base_class}, {"prime_index", c.prime_index},
                                    {"galois_label", g}, {"members", members}, {"size", members.size()},
                                    {"length", c.length.to_string()},
                                    {"length_display", cli::display6(c.length.display_value())}});
                text << "  a=" << label.base_class << "  prime " << c.prime_index << " (s=" << g << ")  "
                     << cli::brace_list(members) << "  " << cli::length_text(c.length) << "\n";
                out.csv_rows.push_back({std::to_string(label.base_class), std::to_string(c.prime_index),
                                        std::to_string(g), cli::csv_cell(json(members)),
                                        std::to_string(members.size()), c.length.to_string()});
            }
        }
    }
    out.text = text.str();
}

// ---- reciprocity ----

void cmd_reciprocity(Output& out, i64 max_prime, unsigned jobs) {
    out.command = "reciprocity";
    out.config = {{"max_prime", max_prime}, {"jobs", jobs}};
    if (max_prime < 5) throw CLI::ValidationError("--max-prime must be at least 5");
    out.has_rows = true;
    std::vector<std::pair<i64, i64>> pairs;
    const auto primes = nt::primes_below(max_prime);
    for (i64 p : primes)
        for (i64 q : primes)
            if (p != 2 && q != 2 && p != q) pairs.emplace_back(p, q);
    const auto rows = parallel_map<ReciprocityRow>(
        pairs.size(), jobs, [&](std::size_t i) { return reciprocity_row(pairs[i].first, pairs[i].second); });
    std::size_t bad = 0;
    std::ostringstream text;
    text << "    p    q  (q/p)  cc  deninger  agree\n";
    out.csv_header = {"p", "q", "legendre", "cc_count", "deninger_count", "agree"};
    for (const auto& r : rows) {
        if (!r.agree()) ++bad;
        out.rows.push_back({{"p", r.p}, {"q", r.q}, {"legendre", r.legendre}, {"cc_count", r.cc_count},
                            {"deninger_count", r.deninger_count}, {"agree", r.agree()}});
        text << std::setw(5) << r.p << std::setw(5) << r.q << std::setw(7) << (r.legendre > 0 ? "+1" : "-1")
             << std::setw(4) << r.cc_count << std::setw(10) << r.deninger_count << "  " << (r.agree() ? "yes" : "NO")
             << "\n";
        out.csv_rows.push_back({std::to_string(r.p), std::to_string(r.q), std::to_string(r.legendre),
                                std::to_string(r.cc_count), std::to_string(r.deninger_count),
                                r.agree() ? "true" : "false"});
    }
    text << rows.size() << " rows, " << bad << " disagreements\n";
    out.text = text.str();
    if (bad) {
        out.verdict = "fail";
        out.exit_code = cli::kMismatch;
    } else {
        out.verdict = "pass";
    }
}

// ---- bridge ----

json decomposition_json(const FiberDecomposition& d, const UnitQuotient& g) {
    json comps = json::array();
    for (const auto& c : d.components) comps.push_back(coset_members(g, c.members));
    return {{"count", d.count}, {"size", d.covering_degree}, {"components", comps}, {"length", cli::length_json(d.length())}};
}

void cmd_bridge(Output& out, const FieldArgs& fa, i64 p, i64 m, int e) {
    out.command = "bridge";
    out.config = {{"field", fa.to_json()}, {"prime", p}, {"level", m}, {"p_exponent", e}};
    const AbelianField f = fa.build();
    const BridgeReport r = bridge_compare(f, p, m, e);
    const UnitQuotient& g = f.galois_group();
    json checks = json::object();
    for (const auto& c : r.equivariance_checks) checks[c.name] = c.ok;
    out.report = {{"field", field_json(f)},
                  {"prime", r.prime},
                  {"level", r.level},
                  {"p_exponent", r.p_exponent},
                  {"labels", r.label_count},
                  {"deninger_side", decomposition_json(r.deninger_side, g)},
                  {"cc_side", decomposition_json(r.cc_side, g)},
                  {"deninger_monodromy", r.deninger_monodromy},
                  {"pushed_monodromy", g.representative(r.pushed_monodromy)},
                  {"cc_monodromy", g.representative(r.cc_monodromy)},
                  {"monodromy_match", r.monodromy_match},
                  {"equivariance_checks", checks},
                  {"anti_equivariance", r.anti_equivariance},
                  {"chi_normalization", r.chi_normalization},
                  {"match", r.match()}};
    std::ostringstream text;
    text << "bridge " << f.label() << ", p=" << p << ", level " << m << " (conductor " << r.conductor << ", e=" << e
         << ")\n";
    text << "  cc side:       r=" << r.cc_side.count << " f=" << r.cc_side.covering_degree << " monodromy "
         << g.representative(r.cc_monodromy) << "H\n";
    text << "  deninger side: r=" << r.deninger_side.count << " f=" << r.deninger_side.covering_degree << " monodromy "
         << r.deninger_monodromy << " mod " << m << " -> " << g.representative(r.pushed_monodromy)
         << "H under chi_F (normalization unit " << r.chi_normalization << ")\n";
    text << "  circle length " << cli::length_text(r.cc_side.length()) << "\n";
    for (const auto& c : r.equivariance_checks) text << "  " << c.name << ": " << (c.ok ? "ok" : "FAILED") << "\n";
    text << "  anti_equivariance: " << (r.anti_equivariance ? "ok" : "FAILED") << "\n";
    text << "match=" << (r.match() ? "true" : "false") << "\n";
    out.text = text.str();
    out.csv_header = {"field", "prime", "level", "cc_count", "deninger_count", "cc_size", "deninger_size",
                      "cc_monodromy", "pushed_monodromy", "match"};
    out.csv_rows = {{f.label(), std::to_string(p), std::to_string(m), std::to_string(r.cc_side.count),
                     std::to_string(r.deninger_side.count), std::to_string(r.cc_side.covering_degree),
                     std::to_string(r.deninger_side.covering_degree), std::to_string(g.representative(r.cc_monodromy)),
                     std::to_string(g.representative(r.pushed_monodromy)), r.match() ? "true" : "false"}};
    out.verdict = r.match() ? "match" : "mismatch";
    out.exit_code = r.match() ? cli::kOk : cli::kMismatch;
}

// ---- verify-all ----

void cmd_verify_all(Output& out, const VerifyConfig& c, std::optional<int> only, bool timing) {
    out.command = "verify-all";
    out.config = {{"seed", c.seed}, {"jobs", c.jobs}, {"cyclotomic_bound", c.cyclotomic_bound},
                  {"max_prime", c.max_prime}, {"reciprocity_bound", c.reciprocity_bound},
                  {"witt_samples", c.witt_samples}, {"equivariance_samples", c.equivariance_samples}};
    if (only) out.config["suite"] = *only;
    out.has_rows = true;
    std::vector<SuiteResult> results;
    if (only) results.push_back(run_suite(*only, c));
    else results = run_all_suites(c);
    bool all = true;
    std::ostringstream text;
    out.csv_header = {"criterion", "name", "passed", "cases", "failures"};
    if (timing) out.csv_header.push_back("seconds_display");
    for (const auto& r : results) {
        all = all && r.passed;
        json row = {{"criterion", r.id}, {"name", r.name}, {"passed", r.passed}, {"cases", r.cases},
                    {"failures", r.failures}, {"limit_seconds", r.limit_seconds}, {"failure_samples", r.failure_samples}};
        if (timing) row["seconds_display"] = cli::display6(r.seconds);
        out.rows.push_back(row);
        if (timing) text << r.summary_line() << "\n";
        else
            text << "criterion " << r.id << " [" << r.name << "]: " << (r.passed ? "PASS" : "FAIL") << " (" << r.cases
                 << " cases, " << r.failures << " failures)\n";
        for (const auto& s : r.failure_samples) text << "    " << s << "\n";
        std::vector<std::string> cells{std::to_string(r.id), r.name, r.passed ? "true" : "false",
                                       std::to_string(r.cases), std::to_string(r.failures)};
        if (timing) {
            std::ostringstream s;
            s << std::fixed << std::setprecision(6) << r.seconds;
            cells.push_back(s.str());
        }
        out.csv_rows.push_back(cells);
    }
    text << (all ? "all suites pass" : "some suites fail") << "\n";
    out.text = text.str();
    out.verdict = all ? "pass" : "fail";
    out.exit_code = all ? cli::kOk : cli::kMismatch;
}

int report_error(const std::string& command, const json& config, cli::Format format, const std::string& code,
                 const std::string& message, int exit_code) {
    std::cerr << "error: " << code << ": " << message << "\n";
    if (format == cli::Format::Json) std::cout << cli::error_json(command, config, code, message).dump(2) << "\n";
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rational Witt vectors, abelian class field theory over Q, and orbit-packet comparisons"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--seed", g.seed, "seed for randomized suites");
    app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1u, 256u));

    WittArgs wa;
    auto* witt = app.add_subcommand("witt", "rational Witt vector arithmetic");
    witt->require_subcommand(1);
    witt->add_option("--ring", wa.ring, "Z, Q, mod:n, F:p or cyc:n");
    auto witt_op = [&](const char* name, const char* help, std::size_t arity) {
        auto* s = witt->add_subcommand(name, help);
        s->add_option("operands", wa.operands)->expected(static_cast<int>(arity))->required();
        s->callback([&wa, name] { wa.op = name; });
        return s;
    };
    witt_op("add", "f + g, the product of power series", 2);
    witt_op("mul", "f * g", 2);
    auto* frob = witt->add_subcommand("frob", "Frobenius F_n");
    frob->add_option("n", wa.n)->required()->check(CLI::PositiveNumber);
    frob->add_option("operand", wa.operands)->expected(1)->required();
    frob->callback([&] { wa.op = "frob"; });
    auto* gh = witt_op("ghost", "ghost components", 1);
    gh->add_option("-N", wa.precision, "number of components")->check(CLI::PositiveNumber);
    witt_op("teich", "Teichmuller lift [a] = 1 - a t", 1);
    witt_op("split", "split counit f -> -f'(0)", 1);

    std::string field_op;
    FieldArgs fa;
    std::optional<i64> prime;
    auto* field = app.add_subcommand("field", "splitting data of an abelian field");
    field->add_option("operation", field_op)->required()->check(CLI::IsMember({"split", "conductor", "ramified"}));
    fa.add_to(field);
    field->add_option("--prime", prime);

    i64 lk_prime = 0, lk_level = 0;
    auto* linking = app.add_subcommand("linking", "p mod m");
    linking->add_option("--prime", lk_prime)->required();
    linking->add_option("--level", lk_level)->required()->check(CLI::PositiveNumber);

    std::string side = "cc";
    i64 mono_prime = 0, mono_level = 0;
    FieldArgs mono_field;
    auto* mono = app.add_subcommand("monodromy", "fiber decomposition tables");
    mono->add_option("--side", side)->check(CLI::IsMember({"cc", "deninger"}));
    mono->add_option("--prime", mono_prime)->required();
    mono->add_option("--level", mono_level)->required()->check(CLI::PositiveNumber);
    mono_field.add_to(mono);

    i64 max_prime = 100;
    auto* recip = app.add_subcommand("reciprocity", "component counts over quadratic fields");
    recip->add_option("--max-prime", max_prime, "odd primes below this bound");

    i64 br_prime = 0, br_level = 0;
    int br_e = 1;
    FieldArgs br_field;
    auto* bridge = app.add_subcommand("bridge", "compare the packet and adelic fibers over p");
    bridge->add_option("--prime", br_prime)->required();
    bridge->add_option("--level", br_level)->required()->check(CLI::PositiveNumber);
    bridge->add_option("--p-exponent", br_e)->check(CLI::Range(1, 8));
    br_field.add_to(bridge);

    VerifyConfig vc;
    std::optional<int> suite;
    bool no_timing = false;
    auto* verify = app.add_subcommand("verify-all", "run the acceptance suites");
    verify->add_option("--cyclotomic-bound", vc.cyclotomic_bound)->check(CLI::Range(1, 200));
    verify->add_option("--max-prime", vc.max_prime)->check(CLI::Range(3, 1000));
    verify->add_option("--reciprocity-bound", vc.reciprocity_bound)->check(CLI::Range(5, 1000));
    verify->add_option("--samples", vc.witt_samples, "random Witt vectors in criteria 1 and 2")->check(CLI::Range(1, 100000));
    verify->add_option("--suite", suite)->check(CLI::Range(1, suite_count()));
    verify->add_flag("--no-timing", no_timing, "omit wall times so output is byte-stable");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::kUsage;
    }

    const cli::Format format = cli::parse_format(g.format);
    Output out;
    out.command = "unknown";
    auto finish_config = [&] {
        out.config["format"] = cli::format_name(format);
        out.config["seed"] = g.seed;
        out.config["jobs"] = g.jobs;
    };
    try {
        if (*witt) {
            cmd_witt(out, wa);
        } else if (*field) {
            cmd_field(out, field_op, fa, prime);
        } else if (*linking) {
            cmd_linking(out, lk_prime, lk_level);
        } else if (*mono) {
            cmd_monodromy(out, side, mono_prime, mono_level, mono_field);
        } else if (*recip) {
            cmd_reciprocity(out, max_prime, g.jobs);
        } else if (*bridge) {
            cmd_bridge(out, br_field, br_prime, br_level, br_e);
        } else if (*verify) {
            vc.seed = g.seed;
            vc.jobs = g.jobs;
            cmd_verify_all(out, vc, suite, !no_timing);
        }
        finish_config();
        cli::emit(out, format, std::cout);
        return out.exit_code;
    } catch (const CLI::ValidationError& e) {
        finish_config();
        return report_error(out.command, out.config, format, "UsageError", e.what(), cli::kUsage);
    } catch (const Error& e) {
        const int rc = e.code() == ErrorCode::Parse ? cli::kUsage : cli::kDomain;
        finish_config();
        return report_error(out.command, out.config, format, error_name(e.code()), e.what(), rc);
    }
}
