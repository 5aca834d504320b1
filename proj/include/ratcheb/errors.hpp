#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ratcheb {

enum class Errc {
  // Caller broke a precondition.
  UnknownFunction,
  NodeOutsideDomain,
  ContourTooSmall,
  ContourOutsideDomain,
  UnsupportedDomain,
  DegeneratePade,
  InvalidArgument,
  // The numerics did not deliver.
  NoRoots,
  PoleAtEvaluationPoint,
  PoleAtNode,
  NoNontrivialSolution,
  LawsonStagnation,
  WindingMismatch,
  NewtonDivergence,
  UnitarityViolated,
};

std::string_view errc_name(Errc code) noexcept;

/// True for error codes that signal a violated precondition rather than a
/// numerical failure. The CLI maps the two classes to different exit codes.
bool is_precondition(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ratcheb
