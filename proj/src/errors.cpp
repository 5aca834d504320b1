#include "ratcheb/errors.hpp"

namespace ratcheb {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::UnknownFunction: return "UnknownFunction";
    case Errc::NodeOutsideDomain: return "NodeOutsideDomain";
    case Errc::ContourTooSmall: return "ContourTooSmall";
    case Errc::ContourOutsideDomain: return "ContourOutsideDomain";
    case Errc::UnsupportedDomain: return "UnsupportedDomain";
    case Errc::DegeneratePade: return "DegeneratePade";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NoRoots: return "NoRoots";
    case Errc::PoleAtEvaluationPoint: return "PoleAtEvaluationPoint";
    case Errc::PoleAtNode: return "PoleAtNode";
    case Errc::NoNontrivialSolution: return "NoNontrivialSolution";
    case Errc::LawsonStagnation: return "LawsonStagnation";
    case Errc::WindingMismatch: return "WindingMismatch";
    case Errc::NewtonDivergence: return "NewtonDivergence";
    case Errc::UnitarityViolated: return "UnitarityViolated";
  }
  return "Unknown";
}

bool is_precondition(Errc code) noexcept {
  switch (code) {
    case Errc::UnknownFunction:
    case Errc::NodeOutsideDomain:
    case Errc::ContourTooSmall:
    case Errc::ContourOutsideDomain:
    case Errc::UnsupportedDomain:
    case Errc::DegeneratePade:
    case Errc::InvalidArgument:
    case Errc::NoRoots:
      return true;
    default:
      return false;
  }
}

}  // namespace ratcheb
