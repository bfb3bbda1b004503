#pragma once

#include <stdexcept>
#include <string>

namespace platoon {

// Base class for all recoverable library errors.
struct SortError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed instance/goal/path/params input. Messages carry line or field
// diagnostics where available.
struct ParseError : SortError {
  using SortError::SortError;
};

// Structurally well-formed input that violates a state invariant
// (duplicate cell, duplicate id, out-of-range position, ...).
struct InvariantViolation : SortError {
  using SortError::SortError;
};

struct InvalidParams : SortError {
  using SortError::SortError;
};

struct IllegalMove : SortError {
  using SortError::SortError;
};

struct NonAdjacent : SortError {
  using SortError::SortError;
};

struct NotAdjacentStates : SortError {
  using SortError::SortError;
};

struct InfeasibleTemplate : SortError {
  using SortError::SortError;
};

struct InfeasibleGoal : SortError {
  using SortError::SortError;
};

struct UnpairedGoal : SortError {
  using SortError::SortError;
};

struct EmptyGoalSet : SortError {
  using SortError::SortError;
};

struct NonpositiveCmin : SortError {
  using SortError::SortError;
};

struct CyclicPrecedence : SortError {
  using SortError::SortError;
};

struct BoundTooSmall : SortError {
  using SortError::SortError;
};

struct AllRunsTimedOut : SortError {
  using SortError::SortError;
};

}  // namespace platoon
