#pragma once

#include <stdexcept>
#include <string>

namespace latconv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact integer arithmetic left the representable range, or an input
// exceeds the coordinate magnitude cap.
struct OverflowError : Error {
  using Error::Error;
};

struct DegenerateHull : Error {
  using Error::Error;
};

struct DegenerateSimplex : Error {
  using Error::Error;
};

// Triangle decomposition requires the first edge column to be primitive.
struct NonPrimitiveEdge : Error {
  using Error::Error;
};

// A caller-guaranteed emptiness condition (edge/face lattice points) fails.
struct PreconditionViolated : Error {
  using Error::Error;
};

// Brute-force lattice scan would exceed its cell budget.
struct BoxTooLarge : Error {
  using Error::Error;
};

// Exhaustive matrix search or direct convolution over budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

struct InsufficientSpan : Error {
  using Error::Error;
};

// FFT work buffers would exceed the configured size cap.
struct SizeOverflow : Error {
  using Error::Error;
};

// Kernel support grid would exceed the configured node budget.
struct SupportTooLarge : Error {
  using Error::Error;
};

struct NonFiniteCoordinate : Error {
  using Error::Error;
};

struct BadCenter : Error {
  using Error::Error;
};

struct BadRadius : Error {
  using Error::Error;
};

struct BadKernel : Error {
  using Error::Error;
};

}  // namespace latconv
