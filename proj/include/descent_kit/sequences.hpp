#ifndef DESCENT_KIT_SEQUENCES_HPP
#define DESCENT_KIT_SEQUENCES_HPP

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "arith.hpp"

namespace descent_kit {

enum class SequenceKind { Fibonacci, Lucas };

inline std::string_view to_string(SequenceKind kind)
{
    return kind == SequenceKind::Fibonacci ? "fibonacci" : "lucas";
}

/// Iterates u_{k+2} = u_{k+1} + u_k from the seeds of the given kind.
class SequenceWalker {
public:
    explicit SequenceWalker(SequenceKind kind)
        : current_(kind == SequenceKind::Fibonacci ? 0 : 2), next_(1)
    {
    }

    const BigInt& value() const { return current_; }
    std::int64_t index() const { return index_; }

    void advance()
    {
        BigInt following = current_ + next_;
        current_ = std::move(next_);
        next_ = std::move(following);
        ++index_;
    }

private:
    BigInt current_;
    BigInt next_;
    std::int64_t index_ = 0;
};

inline BigInt term(SequenceKind kind, std::int64_t k)
{
    if (k < 0)
        throw std::invalid_argument("term: negative index " + std::to_string(k));
    SequenceWalker walker(kind);
    while (walker.index() < k)
        walker.advance();
    return walker.value();
}

/// Terms 0..k_max inclusive.
inline std::vector<BigInt> terms(SequenceKind kind, std::int64_t k_max)
{
    if (k_max < 0)
        throw std::invalid_argument("terms: negative index " + std::to_string(k_max));
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(k_max) + 1);
    SequenceWalker walker(kind);
    for (;;) {
        out.push_back(walker.value());
        if (walker.index() == k_max)
            break;
        walker.advance();
    }
    return out;
}

struct CohnHit {
    std::int64_t k = 0;
    BigInt x;

    friend bool operator==(const CohnHit&, const CohnHit&) = default;
};

/// Every k <= k_max whose term equals 2x^2, in increasing k.
inline std::vector<CohnHit> cohn_scan(SequenceKind kind, std::int64_t k_max)
{
    if (k_max < 1)
        throw std::invalid_argument("cohn_scan: k_max must be positive");
    std::vector<CohnHit> hits;
    SequenceWalker walker(kind);
    for (;;) {
        const BigInt& v = walker.value();
        if ((v & 1) == 0) {
            if (auto x = perfect_square_root(v >> 1))
                hits.push_back({walker.index(), *x});
        }
        if (walker.index() == k_max)
            break;
        walker.advance();
    }
    return hits;
}

} // namespace descent_kit

#endif // DESCENT_KIT_SEQUENCES_HPP
