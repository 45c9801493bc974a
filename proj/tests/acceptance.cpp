// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <descent_kit/descent_kit.hpp>

using namespace descent_kit;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream notes;

    void check(bool cond, const std::string& what)
    {
        if (!cond) {
            pass = false;
            notes << "\n    failed: " << what;
        }
    }
};

std::string show(const std::vector<Representation>& reps)
{
    std::string s = "{";
    for (std::size_t i = 0; i < reps.size(); ++i)
        s += (i ? ",(" : "(") + to_string(reps[i].x) + "," + to_string(reps[i].z) + ")";
    return s + "}";
}

std::vector<SearchBox> criterion8_boxes()
{
    std::vector<SearchBox> boxes;
    for (std::int64_t q : {7, 11, 17})
        boxes.push_back({5, q, 1, 4, 1, 4, 100});
    for (std::int64_t q : {3, 11})
        boxes.push_back({7, q, 1, 3, 1, 3, 60});
    return boxes;
}

void table1(Outcome& o)
{
    const auto report = reproduce_table1();
    for (const auto& row : report.rows)
        o.check(row.passed(), "row x=" + to_string(row.x) + " q=" + std::to_string(row.q));
    o.check(BigInt(21417) * 21417 + 125 * 17 == 2 * ipow(BigInt(47), 5), "21417^2 + 5^3*17 = 2*47^5");
    o.check(report.passed(), "table1 passed()");
}

void rep_sets(Outcome& o)
{
    const auto a = solve_rep(5, ipow(BigInt(7), 5));
    const std::vector<Representation> want_a{{63, 77}, {147, 49}, {183, 5}};
    o.check(a == want_a, "solve_rep(5, 7^5) = " + show(a));

    const auto b = solve_rep(85, ipow(BigInt(47), 5));
    const std::vector<Representation> want_b{{21417, 5}};
    o.check(b == want_b, "solve_rep(85, 47^5) = " + show(b) + ", expected {(21417,5)}");
}

struct DescentCase {
    std::int64_t x, z, d, a, b;
};
const DescentCase descent_cases[] = {{21417, 5, 85, 3, 1}, {183, 5, 5, 3, 1}, {3, 79, 1, 3, 1}, {79, 3, 1, 1, 3}};

void descent_round_trips(Outcome& o)
{
    for (const auto& c : descent_cases) {
        const std::string tag = "(" + std::to_string(c.x) + "," + std::to_string(c.z) + ")";
        const auto found = find_descent(c.x, c.z, c.d, 5);
        if (!found) {
            o.check(false, tag + " not recovered");
            continue;
        }
        o.check(found->a == c.a && found->b == c.b,
                tag + " gave (a,b) = (" + to_string(found->a) + "," + to_string(found->b) + ")");
        o.check(expand_pth_power(*found, 5) == Expansion{c.x, c.z}, tag + " expansion mismatch");
    }
}

void lehmer_bridge(Outcome& o)
{
    for (const auto& c : descent_cases) {
        const auto found = find_descent(c.x, c.z, c.d, 5);
        if (!found) {
            o.check(false, "descent missing");
            continue;
        }
        const auto params = make_params(found->a, found->b, found->d);
        o.check(abs_value(lehmer_number(params, 5)) * found->b == c.z,
                "|L_5| * b = z for x=" + std::to_string(c.x));
    }
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> dist(1, 61);
    int made = 0;
    while (made < 50) {
        LehmerParams params;
        try {
            params = make_params(dist(rng), dist(rng), dist(rng));
        } catch (const invalid_lehmer_params&) {
            continue;
        }
        ++made;
        const auto seq = lehmer_numbers(params, 31);
        for (unsigned t = 1; t <= 31; t += 2)
            if (seq[t] != lehmer_closed_form(params, t))
                o.check(false, "recurrence vs closed form at t=" + std::to_string(t));
    }
}

void primitive_divisor_laws(Outcome& o)
{
    const auto r1 = primitive_divisors(make_params(3, 1, 1), 5);
    o.check(r1.primes == std::vector<BigInt>{79}, "primdiv((3,1,1),5) = {79}");
    o.check(BigInt(79) % 5 == 4, "79 = -1 (mod 5)");
    o.check(primitive_divisors(make_params(3, 1, 85), 5).primes.empty() &&
                !primitive_divisors(make_params(3, 1, 85), 5).exists(),
            "primdiv((3,1,85),5) empty");
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> dist(1, 11);
    int made = 0;
    while (made < 10) {
        LehmerParams params;
        try {
            params = make_params(dist(rng), dist(rng), dist(rng));
        } catch (const invalid_lehmer_params&) {
            continue;
        }
        ++made;
        for (unsigned t : {31u, 37u, 41u})
            o.check(primitive_divisors(params, t).exists(),
                    "no primitive divisor for (" + to_string(params.a) + "," + to_string(params.b) + "," +
                        to_string(params.d) + ") t=" + std::to_string(t));
    }
}

void class_numbers(Outcome& o)
{
    const std::pair<std::int64_t, std::int64_t> expected[] = {{1, 1}, {2, 1}, {3, 1}, {5, 2}, {7, 1}, {21, 4}, {85, 4}};
    for (auto [d, h] : expected)
        o.check(class_number(d) == h, "h(-" + std::to_string(d) + ") = " + std::to_string(class_number(d)));
    for (std::int64_t p = 3; p < 300; p += 2)
        if (is_prime(p)) {
            const auto h = class_number(p);
            o.check(h >= 1 && h < p, "1 <= h(-" + std::to_string(p) + ") < " + std::to_string(p));
        }
}

void cohn_scans(Outcome& o)
{
    o.check(cohn_scan(SequenceKind::Lucas, 10000) == std::vector<CohnHit>{{0, 1}, {6, 3}}, "Lucas scan");
    o.check(cohn_scan(SequenceKind::Fibonacci, 10000) == std::vector<CohnHit>{{0, 0}, {3, 1}, {6, 2}},
            "Fibonacci scan");
}

void oracle_soundness(Outcome& o)
{
    std::size_t counterexamples = 0, exceptional = 0;
    for (const auto& box : criterion8_boxes()) {
        const auto report = cross_validate(box, 1);
        counterexamples += report.counterexamples;
        exceptional += report.known_exceptional_hits;
    }
    o.check(counterexamples == 0, std::to_string(counterexamples) + " counterexamples");
    o.check(exceptional == 1, std::to_string(exceptional) + " KNOWN_EXCEPTIONAL hits");
}

void norm_identity(Outcome& o)
{
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> dist(1, 50);
    const Unit units[] = {{1, 0, 1}, {-1, 0, 1}};
    int made = 0;
    while (made < 100) {
        DescentParams dp;
        try {
            dp = make_descent_params(2 * dist(rng) - 1, 2 * dist(rng) - 1, units[rng() % 2], (rng() & 1) ? 1 : -1,
                                     2 * dist(rng) - 1);
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++made;
        for (unsigned p : {5u, 7u}) {
            const auto e = expand_pth_power(dp, p);
            if (e.x * e.x + dp.d * e.z * e.z != 2 * ipow(dp.y, p))
                o.check(false, "norm identity at a=" + to_string(dp.a) + " b=" + to_string(dp.b));
        }
    }
}

void determinism(Outcome& o)
{
    for (const auto& box : criterion8_boxes())
        o.check(enumerate_solutions(box, 1) == enumerate_solutions(box, 8),
                "p=" + std::to_string(box.p) + " q=" + std::to_string(box.q));
}

} // namespace

int main()
{
    const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
        {"C1 table1 reproduction", table1},
        {"C2 representation sets", rep_sets},
        {"C3 descent round trips", descent_round_trips},
        {"C4 lehmer bridge and closed form", lehmer_bridge},
        {"C5 primitive divisor laws", primitive_divisor_laws},
        {"C6 class numbers", class_numbers},
        {"C7 cohn scans", cohn_scans},
        {"C8 oracle vs search soundness", oracle_soundness},
        {"C9 norm identity", norm_identity},
        {"C10 search determinism", determinism},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            run(o);
        } catch (const std::exception& e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %s (%.2fs)%s\n", o.pass ? "PASS" : "FAIL", name, secs, o.notes.str().c_str());
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
