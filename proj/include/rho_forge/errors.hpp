#pragma once

#include <stdexcept>
#include <string>

namespace rho_forge {

/// Base for every domain failure. `kind()` is the stable error name printed by the CLI.
class RhoError : public std::runtime_error {
 public:
  RhoError(std::string kind, const std::string& what) : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define RHO_FORGE_DEFINE_ERROR(Name)                                         \
  class Name : public RhoError {                                             \
   public:                                                                   \
    explicit Name(const std::string& what) : RhoError(#Name, what) {}        \
  }

RHO_FORGE_DEFINE_ERROR(NonSquare);
RHO_FORGE_DEFINE_ERROR(NotHermitian);
RHO_FORGE_DEFINE_ERROR(NotUnitary);
RHO_FORGE_DEFINE_ERROR(NotInvertible);
RHO_FORGE_DEFINE_ERROR(ZeroPolynomial);
RHO_FORGE_DEFINE_ERROR(IdenticallySingular);
RHO_FORGE_DEFINE_ERROR(MidpointDegenerate);
RHO_FORGE_DEFINE_ERROR(InvalidArgument);

#undef RHO_FORGE_DEFINE_ERROR

}  // namespace rho_forge
