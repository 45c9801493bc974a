#ifndef DESCENT_KIT_SEARCH_HPP
#define DESCENT_KIT_SEARCH_HPP

// Bounded exhaustive search for x^2 + p^m q^n = 2 y^p, gcd(x, y) = 1.
//
// Each (m, n) pair is an independent work unit. Units are handed out to a
// pool of threads through an atomic counter, each unit writes to its own
// slot, and the merged output is sorted, so the result does not depend on
// the worker count or schedule.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "arith.hpp"
#include "oracle.hpp"

namespace descent_kit {

struct SearchBox {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t m_lo = 0, m_hi = 0;
    std::int64_t n_lo = 0, n_hi = 0;
    std::int64_t y_max = 1;
};

inline void validate(const SearchBox& box)
{
    if (box.p < 2 || !is_prime(box.p) || box.q < 2 || !is_prime(box.q))
        throw std::invalid_argument("search box: p and q must be primes");
    if (box.m_lo < 0 || box.n_lo < 0 || box.m_lo > box.m_hi || box.n_lo > box.n_hi)
        throw std::invalid_argument("search box: exponent ranges must be non-empty and non-negative");
    if (box.y_max < 1)
        throw std::invalid_argument("search box: y_max must be at least 1");
}

enum class Provenance { FoundBySearch, Table1, Descent };

inline std::string_view to_string(Provenance p)
{
    switch (p) {
    case Provenance::FoundBySearch: return "search";
    case Provenance::Table1: return "table1";
    case Provenance::Descent: return "descent";
    }
    return "?";
}

struct SolutionRecord {
    BigInt x;
    std::int64_t y = 0;
    std::int64_t m = 0;
    std::int64_t n = 0;
    Provenance provenance = Provenance::FoundBySearch;

    friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

/// x^2 + p^m q^n == 2 y^p and gcd(x, y) == 1, checked exactly.
inline bool verify_solution(std::int64_t p, std::int64_t q, const BigInt& x, std::int64_t y, std::int64_t m,
                            std::int64_t n)
{
    if (x < 1 || y < 1 || m < 0 || n < 0 || p < 2)
        return false;
    const BigInt lhs = x * x + ipow(BigInt(p), static_cast<unsigned>(m)) * ipow(BigInt(q), static_cast<unsigned>(n));
    return lhs == 2 * ipow(BigInt(y), static_cast<unsigned>(p)) && gcd(x, BigInt(y)) == 1;
}

namespace detail {

inline std::vector<SolutionRecord> search_unit(const SearchBox& box, std::int64_t m, std::int64_t n,
                                               const std::vector<BigInt>& two_y_pow)
{
    std::vector<SolutionRecord> hits;
    const BigInt k = ipow(BigInt(box.p), static_cast<unsigned>(m)) * ipow(BigInt(box.q), static_cast<unsigned>(n));
    for (std::int64_t y = 1; y <= box.y_max; ++y) {
        const BigInt& rhs = two_y_pow[static_cast<std::size_t>(y)];
        if (rhs <= k)
            continue;
        const auto x = perfect_square_root(rhs - k);
        if (!x || *x == 0 || gcd(*x, BigInt(y)) != 1)
            continue;
        hits.push_back({*x, y, m, n, Provenance::FoundBySearch});
    }
    return hits;
}

} // namespace detail

/// Every solution in the box, sorted by (m, n, y, x). `jobs` caps the number
/// of worker threads; 0 means one per hardware thread.
inline std::vector<SolutionRecord> enumerate_solutions(const SearchBox& box, unsigned jobs = 1)
{
    validate(box);
    if (box.p > 0xFFFF)
        throw std::invalid_argument("search box: p too large for the exponent");
    std::vector<BigInt> two_y_pow(static_cast<std::size_t>(box.y_max) + 1);
    for (std::int64_t y = 1; y <= box.y_max; ++y)
        two_y_pow[static_cast<std::size_t>(y)] = 2 * ipow(BigInt(y), static_cast<unsigned>(box.p));

    std::vector<std::pair<std::int64_t, std::int64_t>> units;
    for (std::int64_t m = box.m_lo; m <= box.m_hi; ++m)
        for (std::int64_t n = box.n_lo; n <= box.n_hi; ++n)
            units.emplace_back(m, n);

    std::vector<std::vector<SolutionRecord>> slots(units.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < units.size(); i = next++)
            slots[i] = detail::search_unit(box, units[i].first, units[i].second, two_y_pow);
    };

    if (jobs == 0)
        jobs = std::max(1u, std::thread::hardware_concurrency());
    const auto n_threads = static_cast<unsigned>(std::min<std::size_t>(jobs, units.size()));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t)
            pool.emplace_back(worker);
    }

    std::vector<SolutionRecord> out;
    for (auto& s : slots)
        for (auto& r : s)
            out.push_back(std::move(r));
    std::sort(out.begin(), out.end(), [](const SolutionRecord& l, const SolutionRecord& r) {
        return std::tie(l.m, l.n, l.y, l.x) < std::tie(r.m, r.n, r.y, r.x);
    });
    for (const auto& r : out)
        if (!verify_solution(box.p, box.q, r.x, r.y, r.m, r.n))
            throw std::logic_error("enumerate_solutions: emitted record fails verification");
    return out;
}

struct CrossValidationRow {
    std::int64_t m = 0;
    std::int64_t n = 0;
    Verdict verdict;
    std::size_t hits = 0;
    bool counterexample = false;
};

struct CrossValidationReport {
    SearchBox box;
    std::vector<CrossValidationRow> rows;
    std::vector<SolutionRecord> solutions;
    std::size_t counterexamples = 0;
    std::size_t known_exceptional_hits = 0;

    bool ok() const { return counterexamples == 0; }
};

/// Classifies every (m, n) of the box and checks that no pair declared
/// unsolvable has a solution in the box.
inline CrossValidationReport cross_validate(const SearchBox& box, unsigned jobs = 1)
{
    validate(box);
    if (box.m_lo < 1 || box.n_lo < 1)
        throw std::invalid_argument("cross_validate: exponent ranges must start at 1 or above");
    CrossValidationReport report;
    report.box = box;
    report.solutions = enumerate_solutions(box, jobs);
    for (std::int64_t m = box.m_lo; m <= box.m_hi; ++m) {
        for (std::int64_t n = box.n_lo; n <= box.n_hi; ++n) {
            CrossValidationRow row;
            row.m = m;
            row.n = n;
            row.verdict = classify(make_instance(box.p, box.q, m, n));
            row.hits = static_cast<std::size_t>(std::count_if(
                report.solutions.begin(), report.solutions.end(),
                [&](const SolutionRecord& s) { return s.m == m && s.n == n; }));
            row.counterexample = row.verdict.tag == VerdictTag::NoSolutionByTheorem && row.hits > 0;
            if (row.counterexample)
                ++report.counterexamples;
            if (row.verdict.tag == VerdictTag::KnownExceptional)
                report.known_exceptional_hits += row.hits;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

struct Table1Row {
    BigInt x;
    std::int64_t y = 0;
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t m = 0;
    std::int64_t n = 0;
    SearchBox box;
    bool found = false;
    bool verified = false;

    bool passed() const { return found && verified; }
};

struct Table1Report {
    std::vector<Table1Row> rows;

    bool passed() const
    {
        return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const Table1Row& r) { return r.passed(); });
    }
};

/// The known solutions with p = 5, each located by searching a small box
/// around it. The row with n = 0 holds for any q and is checked for several.
inline std::vector<Table1Row> table1_rows()
{
    std::vector<Table1Row> rows;
    rows.push_back({3, 5, 5, 79, 0, 2, {5, 79, 0, 2, 0, 2, 10}});
    rows.push_back({79, 5, 5, 3, 0, 2, {5, 3, 0, 2, 0, 4, 50}});
    for (std::int64_t q : {3, 11, 17})
        rows.push_back({183, 7, 5, q, 3, 0, {5, q, 0, 4, 0, 1, 20}});
    rows.push_back({21417, 47, 5, 17, 3, 1, {5, 17, 0, 4, 0, 4, 100}});
    return rows;
}

inline Table1Report reproduce_table1(unsigned jobs = 1)
{
    Table1Report report;
    report.rows = table1_rows();
    for (auto& row : report.rows) {
        const auto sols = enumerate_solutions(row.box, jobs);
        row.found = std::any_of(sols.begin(), sols.end(), [&](const SolutionRecord& s) {
            return s.x == row.x && s.y == row.y && s.m == row.m && s.n == row.n;
        });
        row.verified = verify_solution(row.p, row.q, row.x, row.y, row.m, row.n);
    }
    return report;
}

} // namespace descent_kit

#endif // DESCENT_KIT_SEARCH_HPP
