#ifndef CANTORCF_CF_HPP
#define CANTORCF_CF_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/rational.hpp"

namespace cantor {

/// A finite word of continued-fraction partial quotients. Every digit is a
/// positive integer of unbounded magnitude. A word is canonical when its last
/// digit is >= 2 unless it has length 1; canonical words are what
/// rational_to_cf produces, but non-canonical words (alternate forms,
/// expansion prefixes) are valid values too.
class CFWord {
public:
    CFWord() = default;
    explicit CFWord(std::vector<Int> digits);
    CFWord(std::initializer_list<long> digits);

    /// Parses "[2,1,3]"; "[]" is the empty word.
    static CFWord parse(std::string_view text);

    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }
    /// 1-based digit access.
    const Int& digit(std::size_t j) const;
    const std::vector<Int>& digits() const { return digits_; }

    bool is_canonical() const;

    CFWord prefix(std::size_t n) const;
    CFWord appended(const Int& digit) const;
    CFWord concat(const CFWord& other) const;

    std::string str() const;

    friend bool operator==(const CFWord& a, const CFWord& b) = default;

private:
    std::vector<Int> digits_;
};

/// The convergents p_j/q_j of a word, for j = -1, 0, ..., n, with the seed
/// values p_-1 = 1, q_-1 = 0, p_0 = 0, q_0 = 1 and the standard two-term
/// recurrence p_j = a_j p_{j-1} + p_{j-2} (same for q).
class ConvergentTable {
public:
    explicit ConvergentTable(const CFWord& word);

    /// Highest convergent order n (the word length).
    std::size_t order() const { return p_.size() - 2; }
    /// Number of stored rows, including j = -1 and j = 0.
    std::size_t rows() const { return p_.size(); }

    /// j ranges over [-1, order()].
    const Int& p(long j) const { return p_.at(static_cast<std::size_t>(j + 1)); }
    const Int& q(long j) const { return q_.at(static_cast<std::size_t>(j + 1)); }

    /// p_j/q_j as an exact rational (j >= 1; j = 0 gives 0/1).
    Rational value(long j) const { return Rational(p(j), q(j)); }

private:
    std::vector<Int> p_;
    std::vector<Int> q_;
};

/// The open interval of all irrationals sharing a given digit prefix, with
/// its exact Lebesgue measure 1/(q_n (q_n + q_{n-1})).
struct RankInterval {
    std::size_t rank = 0;
    Rational lo;
    Rational hi;
    Rational measure;

    /// Open-interval membership; endpoints are excluded.
    bool contains(const Rational& x) const { return lo < x && x < hi; }
    bool intersects(const RankInterval& other) const { return lo < other.hi && other.lo < hi; }
};

/// Exact value of a finite continued fraction; lies in (0, 1].
/// Throws DomainError on the empty word.
Rational eval_finite(const CFWord& word);

/// Canonical expansion of a rational in (0, 1] (last digit >= 2 unless the
/// word has length 1). Inverse of eval_finite.
CFWord rational_to_cf(const Rational& x);

/// The non-canonical twin [a_1,...,a_n-1,1] of a word whose last digit
/// exceeds 1. Both forms evaluate to the same rational.
CFWord alternate_form(const CFWord& word);

ConvergentTable convergents(const CFWord& word);

/// Exact value of [a_1,...,a_n,r] for a real tail r >= 1.
Rational tail_value(const CFWord& word, const Rational& r);

/// Rank interval of the irrationals extending the given nonempty prefix.
RankInterval rank_interval(const CFWord& prefix);

} // namespace cantor

#endif
