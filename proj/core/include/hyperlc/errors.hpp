#pragma once

#include <stdexcept>
#include <string>

namespace hyperlc {

// Domain failures carry a stable code that the CLI reports in JSON.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define HYPERLC_DOMAIN_ERROR(Name)                                  \
  class Name : public DomainError {                                 \
   public:                                                          \
    explicit Name(const std::string& message)                       \
        : DomainError(#Name, message) {}                            \
  }

HYPERLC_DOMAIN_ERROR(DivisionByZeroPolynomial);
HYPERLC_DOMAIN_ERROR(DegreeZeroInput);
HYPERLC_DOMAIN_ERROR(EndpointIsRoot);
HYPERLC_DOMAIN_ERROR(NonPolynomialSystem);
HYPERLC_DOMAIN_ERROR(UndeterminedType);
HYPERLC_DOMAIN_ERROR(DegenerateLeadingCoefficient);
HYPERLC_DOMAIN_ERROR(PatternNotAchieved);
HYPERLC_DOMAIN_ERROR(SearchExhausted);
HYPERLC_DOMAIN_ERROR(OutOfRange);

#undef HYPERLC_DOMAIN_ERROR

// Malformed polynomial text or JSON input. Reported as a usage error.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperlc
