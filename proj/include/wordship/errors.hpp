#ifndef WORDSHIP_ERRORS_HPP
#define WORDSHIP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wordship {

// Base type for anything caused by bad input or bad files.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A computed result contradicts a structural guarantee of the library.
// The CLI maps this to a distinct exit code.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

// Transport-level failure of a context provider; retryable.
class ProviderError : public Error {
public:
  ProviderError(std::string provider, const std::string& what)
      : Error("provider '" + provider + "': " + what), provider_(std::move(provider)) {}

  const std::string& provider() const { return provider_; }

private:
  std::string provider_;
};

}  // namespace wordship

#endif  // WORDSHIP_ERRORS_HPP
