#ifndef UOWSN_ERRORS_HPP
#define UOWSN_ERRORS_HPP

#include <stdexcept>

namespace uowsn {

/// A physical quantity or identifier is outside the domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A simulation or deployment configuration is inconsistent.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace uowsn

#endif  // UOWSN_ERRORS_HPP
