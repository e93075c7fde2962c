#include "cantor/cf.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace cantor {

namespace {

void check_digit(const Int& d) {
    if (d < 1) throw DomainError("cf word: digit below 1");
}

} // namespace

CFWord::CFWord(std::vector<Int> digits) : digits_(std::move(digits)) {
    for (const auto& d : digits_) check_digit(d);
}

CFWord::CFWord(std::initializer_list<long> digits) {
    digits_.reserve(digits.size());
    for (long d : digits) {
        Int z(d);
        check_digit(z);
        digits_.push_back(std::move(z));
    }
}

CFWord CFWord::parse(std::string_view text) {
    auto fail = [&] { throw DomainError("cf word: malformed '" + std::string(text) + "'"); };
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    skip_ws();
    if (i >= text.size() || text[i] != '[') fail();
    ++i;
    std::vector<Int> digits;
    skip_ws();
    if (i < text.size() && text[i] == ']') return CFWord{};
    while (true) {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) != 0)) ++i;
        if (i == start) fail();
        Int d;
        mpz_set_str(d.get_mpz_t(), std::string(text.substr(start, i - start)).c_str(), 10);
        check_digit(d);
        digits.push_back(std::move(d));
        skip_ws();
        if (i >= text.size()) fail();
        if (text[i] == ']') break;
        if (text[i] != ',') fail();
        ++i;
    }
    ++i;
    skip_ws();
    if (i != text.size()) fail();
    return CFWord(std::move(digits));
}

const Int& CFWord::digit(std::size_t j) const {
    if (j < 1 || j > digits_.size()) throw DomainError("cf word: digit index out of range");
    return digits_[j - 1];
}

bool CFWord::is_canonical() const {
    if (digits_.empty()) return true;
    if (digits_.size() == 1) return true;
    return digits_.back() >= 2;
}

CFWord CFWord::prefix(std::size_t n) const {
    n = std::min(n, digits_.size());
    return CFWord(std::vector<Int>(digits_.begin(), digits_.begin() + static_cast<long>(n)));
}

CFWord CFWord::appended(const Int& digit) const {
    check_digit(digit);
    std::vector<Int> d = digits_;
    d.push_back(digit);
    return CFWord(std::move(d));
}

CFWord CFWord::concat(const CFWord& other) const {
    std::vector<Int> d = digits_;
    d.insert(d.end(), other.digits_.begin(), other.digits_.end());
    return CFWord(std::move(d));
}

std::string CFWord::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (i != 0) out += ",";
        out += digits_[i].get_str();
    }
    out += "]";
    return out;
}

ConvergentTable::ConvergentTable(const CFWord& word) {
    const auto n = word.size();
    p_.reserve(n + 2);
    q_.reserve(n + 2);
    p_.push_back(Int(1)); // j = -1
    q_.push_back(Int(0));
    p_.push_back(Int(0)); // j = 0
    q_.push_back(Int(1));
    for (std::size_t j = 1; j <= n; ++j) {
        const Int& a = word.digit(j);
        p_.push_back(a * p_[j] + p_[j - 1]);
        q_.push_back(a * q_[j] + q_[j - 1]);
    }
}

Rational eval_finite(const CFWord& word) {
    if (word.empty()) throw DomainError("eval_finite: empty word");
    ConvergentTable table(word);
    const long n = static_cast<long>(word.size());
    return table.value(n);
}

CFWord rational_to_cf(const Rational& x) {
    if (x.sign() <= 0 || x > Rational(1)) throw DomainError("rational_to_cf: input outside (0, 1]");
    // Euclid's algorithm on num/den; the floor-based expansion ends with a
    // digit >= 2 except for the single-digit word [1] = 1.
    Int p = x.num();
    Int q = x.den();
    std::vector<Int> digits;
    while (sgn(p) != 0) {
        Int a, r;
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
        digits.push_back(std::move(a));
        q = p;
        p = std::move(r);
    }
    return CFWord(std::move(digits));
}

CFWord alternate_form(const CFWord& word) {
    if (word.empty()) throw DomainError("alternate_form: empty word");
    if (word.digits().back() == 1) throw DomainError("alternate_form: last digit is already 1");
    std::vector<Int> d = word.digits();
    d.back() -= 1;
    d.emplace_back(1);
    return CFWord(std::move(d));
}

ConvergentTable convergents(const CFWord& word) { return ConvergentTable(word); }

Rational tail_value(const CFWord& word, const Rational& r) {
    if (r < Rational(1)) throw DomainError("tail_value: tail below 1");
    ConvergentTable table(word);
    const long n = static_cast<long>(word.size());
    const Rational num = Rational(table.p(n)) * r + Rational(table.p(n - 1));
    const Rational den = Rational(table.q(n)) * r + Rational(table.q(n - 1));
    return num / den;
}

RankInterval rank_interval(const CFWord& prefix) {
    if (prefix.empty()) throw DomainError("rank_interval: empty prefix");
    ConvergentTable table(prefix);
    const long n = static_cast<long>(prefix.size());
    Rational a = table.value(n);
    Rational b(table.p(n) + table.p(n - 1), table.q(n) + table.q(n - 1));
    if (b < a) std::swap(a, b);
    RankInterval out;
    out.rank = prefix.size();
    out.lo = std::move(a);
    out.hi = std::move(b);
    out.measure = out.hi - out.lo;
    return out;
}

} // namespace cantor
