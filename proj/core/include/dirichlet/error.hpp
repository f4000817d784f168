#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dirichlet {

/// Base of every error raised by the library. name() is the stable
/// identifier the CLI prints on standard error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual std::string_view name() const noexcept = 0;
};

#define DIRICHLET_DEFINE_ERROR(Type)                                      \
  class Type : public Error {                                             \
   public:                                                                \
    using Error::Error;                                                   \
    std::string_view name() const noexcept override { return #Type; }     \
  }

// Function-spec validation.
DIRICHLET_DEFINE_ERROR(SyntaxError);
DIRICHLET_DEFINE_ERROR(CoverageError);
DIRICHLET_DEFINE_ERROR(UnboundedError);
DIRICHLET_DEFINE_ERROR(MonotonicityError);

// Argument outside an operation's domain.
DIRICHLET_DEFINE_ERROR(DomainError);

// Adaptive quadrature ran out of subdivision budget.
DIRICHLET_DEFINE_ERROR(QuadratureError);

#undef DIRICHLET_DEFINE_ERROR

}  // namespace dirichlet
