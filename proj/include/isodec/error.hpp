#ifndef ISODEC_ERROR_HPP
#define ISODEC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace isodec {

enum class Errc {
  // group_core
  InvalidPermutation,
  DegreeMismatch,
  OrderCapExceeded,
  EmptyGeneratorList,
  InvalidElementIndex,
  NotASubgroup,
  InvalidArgument,
  // cyclotomic
  ZeroConductor,
  ConductorMismatch,
  NotCoprime,
  DivisionByZero,
  NotRational,
  // characters
  NoSuitablePrime,
  GroupMismatch,
  NonIntegralAverage,
  NotIrreducible,
  NonIntegralN,
  // covering
  PeriodMismatch,
  RelationFails,
  NotGenerating,
  NonIntegralGenus,
  UnknownGenerator,
  // decomposition
  NonIntegralDimension,
  NotAdmissible,
  NotAPartition,
  NonIntegralMultiplicity,
  TooFewFactors,
  // cli
  ParseError,
  ValidationError,
  // internal identity failed; surfaces as exit code 2
  EngineAssertion,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Throws EngineAssertion when an identity the engine relies on does not hold.
inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw Error(Errc::EngineAssertion, what);
}

}  // namespace isodec

#endif  // ISODEC_ERROR_HPP
