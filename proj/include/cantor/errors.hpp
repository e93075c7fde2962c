#ifndef CANTORCF_ERRORS_HPP
#define CANTORCF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cantor {

/// Input outside an operation's documented domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A digit source ran out before the requested index. Carries the number of
/// digits that were available.
class ExhaustionError : public std::runtime_error {
public:
    ExhaustionError(const std::string& what, std::size_t available)
        : std::runtime_error(what + " (available: " + std::to_string(available) + ")"),
          available_(available) {}

    std::size_t available() const noexcept { return available_; }

private:
    std::size_t available_;
};

/// A requested tolerance could not be reached within the evaluation depth cap.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cantor

#endif
