#include "qlogic/errors.hpp"

#include <algorithm>

namespace qlogic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroInSeed: return "ZeroInSeed";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::AlphaNotConcentrated: return "AlphaNotConcentrated";
    case ErrorKind::WeightsInvalid: return "WeightsInvalid";
    case ErrorKind::UnreachableConditioning: return "UnreachableConditioning";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::DomainTooSmall: return "DomainTooSmall";
    case ErrorKind::ZeroMassConditioning: return "ZeroMassConditioning";
    case ErrorKind::IncompleteTable: return "IncompleteTable";
    case ErrorKind::LogicMismatch: return "LogicMismatch";
    case ErrorKind::DuplicateValue: return "DuplicateValue";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::JoinNotOne: return "JoinNotOne";
    case ErrorKind::DegenerateVariance: return "DegenerateVariance";
    case ErrorKind::SizeOutOfRange: return "SizeOutOfRange";
    case ErrorKind::NotHorizontalSum: return "NotHorizontalSum";
    case ErrorKind::InfeasibleAllocation: return "InfeasibleAllocation";
  }
  return "?";
}

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::StateRange: return "range";
    case Rule::StateBounds: return "state (i)";
    case Rule::StateAdditivity: return "state (ii)";
    case Rule::CsJoin: return "cs join";
    case Rule::CsRelativeComplement: return "cs relative complement";
    case Rule::C1: return "C1";
    case Rule::C2: return "C2";
    case Rule::C3: return "C3";
    case Rule::S1: return "s1";
    case Rule::SRange: return "range";
    case Rule::S2: return "s2";
    case Rule::S3: return "s3";
  }
  return "?";
}

bool Violation::involves(const Cell& cell) const {
  return std::find(cells.begin(), cells.end(), cell) != cells.end();
}

}  // namespace qlogic
