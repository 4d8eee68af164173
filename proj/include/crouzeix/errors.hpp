// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace crouzeix {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CROUZEIX_DEFINE_ERROR(Name)   \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

CROUZEIX_DEFINE_ERROR(InvalidMatrix);
CROUZEIX_DEFINE_ERROR(NotHermitian);
CROUZEIX_DEFINE_ERROR(SingularMatrix);
CROUZEIX_DEFINE_ERROR(ContourTooSmall);
CROUZEIX_DEFINE_ERROR(SingularResolvent);
CROUZEIX_DEFINE_ERROR(DegenerateDivision);
CROUZEIX_DEFINE_ERROR(PoleProximity);
CROUZEIX_DEFINE_ERROR(ZeroOperator);
CROUZEIX_DEFINE_ERROR(NotNormal);
CROUZEIX_DEFINE_ERROR(ZeroVector);
CROUZEIX_DEFINE_ERROR(NumericallyAmbiguous);
CROUZEIX_DEFINE_ERROR(NotCyclic);
CROUZEIX_DEFINE_ERROR(RankDeficientLift);
CROUZEIX_DEFINE_ERROR(ZerosTooClose);
CROUZEIX_DEFINE_ERROR(NotToeplitz);
CROUZEIX_DEFINE_ERROR(ParseError);

#undef CROUZEIX_DEFINE_ERROR

}  // namespace crouzeix
