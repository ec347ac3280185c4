#pragma once

#include <stdexcept>
#include <string>

namespace qpsi {

// Root of every error raised by the library. Each subclass names one
// failure mode so callers (and the CLI) can react to it specifically.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QPSI_DEFINE_ERROR(Name, Base)        \
  class Name : public Base {                 \
   public:                                   \
    using Base::Base;                        \
  };

// algebra-core
QPSI_DEFINE_ERROR(SymbolMismatch, Error)
QPSI_DEFINE_ERROR(FloorViolation, Error)
QPSI_DEFINE_ERROR(NonInvertibleLeadingCoefficient, Error)
QPSI_DEFINE_ERROR(ZeroDivisor, Error)
QPSI_DEFINE_ERROR(InexactDivision, Error)

// A bilateral/multiple formal sum whose terms never leave the truncation
// window. Reported as a floor problem: the substitution scheme does not
// push the tails to high q-order.
QPSI_DEFINE_ERROR(FormalDivergence, FloorViolation)

// qpochhammer / numerics
QPSI_DEFINE_ERROR(NonPositiveQOrder, Error)
QPSI_DEFINE_ERROR(PoleAtNonPositiveInteger, Error)
QPSI_DEFINE_ERROR(NonConvergentTail, Error)
QPSI_DEFINE_ERROR(DivergentDirection, Error)
QPSI_DEFINE_ERROR(FactorNearZero, Error)
QPSI_DEFINE_ERROR(CertificateContradicted, Error)

// identity corpus / root systems
QPSI_DEFINE_ERROR(RegionViolation, Error)
QPSI_DEFINE_ERROR(UnknownIdentity, Error)
QPSI_DEFINE_ERROR(UnsupportedRootSystem, Error)
QPSI_DEFINE_ERROR(NonStabilisedLatticeSum, Error)
QPSI_DEFINE_ERROR(CoincidentPoints, Error)

// number theory
// The lacunary theta power and the product form disagree.
QPSI_DEFINE_ERROR(ThetaProductMismatch, Error)
QPSI_DEFINE_ERROR(InvalidArgument, Error)

// ncalg
QPSI_DEFINE_ERROR(SingularFactor, Error)
QPSI_DEFINE_ERROR(NormConditionViolated, Error)
QPSI_DEFINE_ERROR(NonConvergentProduct, Error)

#undef QPSI_DEFINE_ERROR

}  // namespace qpsi
