// descent-kit: command-line front end. Every result is one JSON object per
// line with all integers rendered as decimal strings.
//
// Exit codes: 0 success, 1 crossval counterexample or table1 failure,
// 2 invalid input.

#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <descent_kit/descent_kit.hpp>

namespace dk = descent_kit;
using json = nlohmann::json;

namespace {

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

dk::BigInt parse_big(const std::string& flag, const std::string& text)
{
    static const std::regex integer(R"(-?[0-9]+)");
    if (!std::regex_match(text, integer))
        throw usage_error("--" + flag + ": not an integer: '" + text + "'");
    return dk::BigInt(text);
}

std::int64_t parse_i64(const std::string& flag, const std::string& text)
{
    const dk::BigInt v = parse_big(flag, text);
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw usage_error("--" + flag + ": out of range: " + text);
    return static_cast<std::int64_t>(v);
}

std::int64_t require_i64(const std::string& flag, const std::optional<std::string>& text)
{
    if (!text)
        throw usage_error("--" + flag + " is required");
    return parse_i64(flag, *text);
}

dk::BigInt require_big(const std::string& flag, const std::optional<std::string>& text)
{
    if (!text)
        throw usage_error("--" + flag + " is required");
    return parse_big(flag, *text);
}

std::string str(const dk::BigInt& v) { return v.str(); }
std::string str(std::int64_t v) { return std::to_string(v); }

void emit(const json& j) { std::cout << j.dump() << '\n'; }

json verdict_json(const dk::Verdict& v)
{
    json reasons = json::array();
    for (const auto& r : v.reasons)
        reasons.push_back({{"condition", r.name}, {"holds", r.holds}, {"detail", r.detail}});
    return {{"verdict", std::string(dk::to_string(v.tag))},
            {"d", str(v.d)},
            {"z", str(v.z)},
            {"h", str(v.h)},
            {"reasons", reasons}};
}

json record_json(const dk::SearchBox& box, const dk::SolutionRecord& r)
{
    return {{"x", str(r.x)},       {"y", str(r.y)}, {"p", str(box.p)}, {"q", str(box.q)},
            {"m", str(r.m)},       {"n", str(r.n)}, {"provenance", std::string(dk::to_string(r.provenance))}};
}

struct Flags {
    std::optional<std::string> p, q, m, n, d, N, a, b, t, x, z, kmax, ymax, mmax, nmax, kind, eps2;
    unsigned jobs = 1;
    bool coprime = false;
    bool twin = false;
};

dk::SearchBox box_from(const Flags& f, std::int64_t default_lo)
{
    dk::SearchBox box;
    box.p = require_i64("p", f.p);
    box.q = require_i64("q", f.q);
    box.m_lo = f.m ? parse_i64("m", *f.m) : default_lo;
    box.n_lo = f.n ? parse_i64("n", *f.n) : default_lo;
    box.m_hi = require_i64("mmax", f.mmax);
    box.n_hi = require_i64("nmax", f.nmax);
    box.y_max = require_i64("ymax", f.ymax);
    return box;
}

int run_oracle(const Flags& f)
{
    if (f.twin) {
        const auto p = require_i64("p", f.p);
        const auto m = require_i64("m", f.m);
        json j = verdict_json(dk::twin_prime_verdict(p, m));
        j["p"] = str(p);
        j["q"] = str(p + 2);
        j["m"] = str(2 * m);
        j["n"] = str(2 * p);
        emit(j);
        return 0;
    }
    const auto p = require_i64("p", f.p);
    const auto q = require_i64("q", f.q);
    const auto m = require_i64("m", f.m);
    const auto n = require_i64("n", f.n);
    dk::EquationInstance inst;
    std::optional<std::int64_t> factor;
    if (f.N) {
        const auto reduction = dk::reduce_exponent(p, q, m, n, parse_i64("N", *f.N));
        inst = reduction.instance;
        factor = reduction.factor;
    } else {
        inst = dk::make_instance(p, q, m, n);
    }
    json j = verdict_json(dk::classify(inst));
    j["p"] = str(inst.p);
    j["q"] = str(inst.q);
    j["m"] = str(inst.m);
    j["n"] = str(inst.n);
    if (factor)
        j["exponent_factor"] = str(*factor);
    emit(j);
    return 0;
}

int run_search(const Flags& f)
{
    const auto box = box_from(f, 0);
    for (const auto& r : dk::enumerate_solutions(box, f.jobs))
        emit(record_json(box, r));
    return 0;
}

int run_crossval(const Flags& f)
{
    const auto box = box_from(f, 1);
    const auto report = dk::cross_validate(box, f.jobs);
    for (const auto& row : report.rows) {
        emit({{"p", str(box.p)},
              {"q", str(box.q)},
              {"m", str(row.m)},
              {"n", str(row.n)},
              {"verdict", std::string(dk::to_string(row.verdict.tag))},
              {"d", str(row.verdict.d)},
              {"hits", str(static_cast<std::int64_t>(row.hits))},
              {"counterexample", row.counterexample}});
    }
    for (const auto& s : report.solutions)
        emit(record_json(box, s));
    emit({{"counterexamples", str(static_cast<std::int64_t>(report.counterexamples))},
          {"known_exceptional_hits", str(static_cast<std::int64_t>(report.known_exceptional_hits))},
          {"ok", report.ok()}});
    return report.ok() ? 0 : 1;
}

int run_table1(const Flags& f)
{
    const auto report = dk::reproduce_table1(f.jobs);
    for (const auto& row : report.rows) {
        emit({{"x", str(row.x)},
              {"y", str(row.y)},
              {"p", str(row.p)},
              {"q", str(row.q)},
              {"m", str(row.m)},
              {"n", str(row.n)},
              {"found", row.found},
              {"verified", row.verified}});
    }
    emit({{"table1", report.passed() ? "PASS" : "FAIL"}});
    return report.passed() ? 0 : 1;
}

int run_classnum(const Flags& f)
{
    const auto d = require_i64("d", f.d);
    const auto D = dk::discriminant_of(d);
    json forms = json::array();
    for (const auto& form : dk::reduced_forms(D))
        forms.push_back({str(form.a), str(form.b), str(form.c)});
    emit({{"d", str(d)}, {"discriminant", str(D)}, {"h", str(static_cast<std::int64_t>(forms.size()))}, {"forms", forms}});
    return 0;
}

dk::LehmerParams params_from(const Flags& f)
{
    return dk::make_params(require_big("a", f.a), require_big("b", f.b), require_big("d", f.d));
}

unsigned index_from(const Flags& f)
{
    const auto t = require_i64("t", f.t);
    if (t < 1 || t > 100000)
        throw usage_error("--t must lie in [1, 100000]");
    return static_cast<unsigned>(t);
}

int run_lehmer(const Flags& f)
{
    const auto params = params_from(f);
    const auto t = index_from(f);
    json j{{"a", str(params.a)}, {"b", str(params.b)}, {"d", str(params.d)}, {"t", str(std::int64_t{t})},
           {"R", str(params.R)}, {"S", str(params.S)}, {"Q", str(params.Q)},
           {"value", str(dk::lehmer_number(params, t))}};
    if (t % 2 == 1)
        j["closed_form"] = str(dk::lehmer_closed_form(params, t));
    emit(j);
    return 0;
}

int run_primdiv(const Flags& f)
{
    const auto params = params_from(f);
    const auto t = index_from(f);
    if (t < 2)
        throw usage_error("--t must be at least 2 for primdiv");
    const auto report = dk::primitive_divisors(params, t);
    json primes = json::array();
    for (const auto& p : report.primes)
        primes.push_back(str(p));
    emit({{"a", str(params.a)},
          {"b", str(params.b)},
          {"d", str(params.d)},
          {"t", str(std::int64_t{t})},
          {"value", str(report.lehmer_value)},
          {"primitive_divisors", primes},
          {"exists", report.exists()},
          {"undetermined_cofactor", str(report.undetermined_cofactor)}});
    return 0;
}

int run_rep(const Flags& f)
{
    const auto d = require_big("d", f.d);
    const auto N = require_big("N", f.N);
    for (const auto& r : dk::solve_rep(d, N, f.coprime))
        emit({{"d", str(d)}, {"N", str(N)}, {"x", str(r.x)}, {"z", str(r.z)}});
    return 0;
}

json descent_json(const dk::DescentParams& dp, unsigned p)
{
    const auto e = dk::expand_pth_power(dp, p);
    json j{{"a", str(dp.a)},     {"b", str(dp.b)}, {"eps1", dk::to_string(dp.eps1)}, {"eps2", str(std::int64_t{dp.eps2})},
           {"d", str(dp.d)},     {"y", str(dp.y)}, {"p", str(std::int64_t{p})},       {"x", str(e.x)},
           {"z", str(e.z)},      {"parity", std::string(dk::to_string(dk::mod8_filter(dp.d)))}};
    try {
        j["lehmer_p"] = str(dk::lehmer_number(dk::make_params(dp.a, dp.b, dp.d), p));
    } catch (const dk::invalid_lehmer_params& err) {
        j["lehmer_p"] = nullptr;
        j["lehmer_note"] = err.what();
    }
    return j;
}

int run_descent(const Flags& f)
{
    const auto p_raw = require_i64("p", f.p);
    if (p_raw < 5 || p_raw > 100000)
        throw usage_error("--p must be a prime in [5, 100000]");
    const auto p = static_cast<unsigned>(p_raw);
    const auto d = require_big("d", f.d);
    if (f.x || f.z) {
        const auto found = dk::find_descent(require_big("x", f.x), require_big("z", f.z), d, p);
        if (!found) {
            emit({{"found", false}, {"d", str(d)}, {"p", str(p_raw)}});
            return 0;
        }
        json j = descent_json(*found, p);
        j["found"] = true;
        emit(j);
        return 0;
    }
    const int eps2 = f.eps2 ? static_cast<int>(parse_i64("eps2", *f.eps2)) : 1;
    emit(descent_json(dk::make_descent_params(require_big("a", f.a), require_big("b", f.b), {}, eps2, d), p));
    return 0;
}

int run_cohn(const Flags& f)
{
    const auto kmax = require_i64("kmax", f.kmax);
    std::vector<dk::SequenceKind> kinds{dk::SequenceKind::Fibonacci, dk::SequenceKind::Lucas};
    if (f.kind) {
        if (*f.kind == "fibonacci")
            kinds = {dk::SequenceKind::Fibonacci};
        else if (*f.kind == "lucas")
            kinds = {dk::SequenceKind::Lucas};
        else
            throw usage_error("--kind must be 'fibonacci' or 'lucas'");
    }
    for (auto kind : kinds)
        for (const auto& hit : dk::cohn_scan(kind, kmax))
            emit({{"kind", std::string(dk::to_string(kind))}, {"k", str(hit.k)}, {"x", str(hit.x)}});
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Tools for x^2 + p^m q^n = 2 y^p: oracle, search, Lehmer numbers, class numbers", "descent-kit"};
    app.require_subcommand(1, 1);
    Flags f;

    auto add = [&](CLI::App* sub, const std::string& name, std::optional<std::string>& slot, const std::string& help) {
        sub->add_option_function<std::string>(
            "--" + name, [&slot](const std::string& v) { slot = v; }, help);
    };
    auto add_jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs", f.jobs, "worker threads (0 = all cores)")->check(CLI::Range(0u, 1024u));
    };

    auto* oracle = app.add_subcommand("oracle", "classify an instance (p, q, m, n)");
    add(oracle, "p", f.p, "prime p > 3");
    add(oracle, "q", f.q, "odd prime q != p");
    add(oracle, "m", f.m, "exponent of p");
    add(oracle, "n", f.n, "exponent of q");
    add(oracle, "N", f.N, "exponent of y, a multiple of p");
    oracle->add_flag("--twin", f.twin, "twin-prime specialization: uses --p and --m only");

    for (auto [name, help] : {std::pair{"search", "enumerate solutions in a box"},
                              std::pair{"crossval", "check oracle verdicts against search"}}) {
        auto* sub = app.add_subcommand(name, help);
        add(sub, "p", f.p, "prime p");
        add(sub, "q", f.q, "prime q");
        add(sub, "m", f.m, "lowest m");
        add(sub, "n", f.n, "lowest n");
        add(sub, "mmax", f.mmax, "highest m");
        add(sub, "nmax", f.nmax, "highest n");
        add(sub, "ymax", f.ymax, "highest y");
        add_jobs(sub);
    }

    auto* table1 = app.add_subcommand("table1", "reproduce the table of known solutions");
    add_jobs(table1);

    auto* classnum = app.add_subcommand("classnum", "class number h(-d) by reduced forms");
    add(classnum, "d", f.d, "positive squarefree d");

    for (auto [name, help] : {std::pair{"lehmer", "t-th Lehmer number of (a + b sqrt(-d)) / sqrt(2)"},
                              std::pair{"primdiv", "primitive divisors of the t-th Lehmer number"}}) {
        auto* sub = app.add_subcommand(name, help);
        add(sub, "a", f.a, "a");
        add(sub, "b", f.b, "b");
        add(sub, "d", f.d, "d");
        add(sub, "t", f.t, "index t");
    }

    auto* rep = app.add_subcommand("rep", "solve x^2 + d z^2 = 2N");
    add(rep, "d", f.d, "d");
    add(rep, "N", f.N, "N");
    rep->add_flag("--coprime", f.coprime, "keep only gcd(x, dz) = 1");

    auto* descent = app.add_subcommand("descent", "expand (a, b) or recover (a, b) from (x, z)");
    add(descent, "p", f.p, "odd prime exponent p > 3");
    add(descent, "d", f.d, "d");
    add(descent, "a", f.a, "a (expand mode)");
    add(descent, "b", f.b, "b (expand mode)");
    add(descent, "eps2", f.eps2, "sign of b (expand mode)");
    add(descent, "x", f.x, "x (recover mode)");
    add(descent, "z", f.z, "z (recover mode)");

    auto* cohn = app.add_subcommand("cohn", "terms of the form 2x^2 in Fibonacci/Lucas sequences");
    add(cohn, "kmax", f.kmax, "largest index");
    add(cohn, "kind", f.kind, "fibonacci or lucas (default both)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        const std::string cmd = app.get_subcommands().front()->get_name();
        if (cmd == "oracle") return run_oracle(f);
        if (cmd == "search") return run_search(f);
        if (cmd == "crossval") return run_crossval(f);
        if (cmd == "table1") return run_table1(f);
        if (cmd == "classnum") return run_classnum(f);
        if (cmd == "lehmer") return run_lehmer(f);
        if (cmd == "primdiv") return run_primdiv(f);
        if (cmd == "rep") return run_rep(f);
        if (cmd == "descent") return run_descent(f);
        if (cmd == "cohn") return run_cohn(f);
    } catch (const std::invalid_argument& e) {
        std::cerr << "descent-kit: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
