#pragma once

#include <stdexcept>
#include <string>

namespace qcw {

/// Base class for all workbench errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define QCW_DEFINE_ERROR(NAME)                                   \
  struct NAME : Error {                                          \
    explicit NAME(const std::string& what = #NAME) : Error(what) {} \
  }

// boolfn
QCW_DEFINE_ERROR(OutOfDomain);
QCW_DEFINE_ERROR(AlphabetUnsupported);
QCW_DEFINE_ERROR(EmptySabotageSet);
QCW_DEFINE_ERROR(EmptyDomain);
QCW_DEFINE_ERROR(ArityOverflow);

// numopt
QCW_DEFINE_ERROR(NotHermitian);
QCW_DEFINE_ERROR(ConvergenceFailure);
QCW_DEFINE_ERROR(NoFeasiblePoint);
QCW_DEFINE_ERROR(SizeCapExceeded);

// measures
QCW_DEFINE_ERROR(PartialUnsupported);
QCW_DEFINE_ERROR(InconsistentAssignment);

// qsim
QCW_DEFINE_ERROR(DimensionMismatch);
QCW_DEFINE_ERROR(BadFactorization);
QCW_DEFINE_ERROR(NotUnitary);

// constructions
QCW_DEFINE_ERROR(BadArity);
QCW_DEFINE_ERROR(NotBoundedError);
QCW_DEFINE_ERROR(IncompleteCoverage);
QCW_DEFINE_ERROR(QszkPromiseViolated);
QCW_DEFINE_ERROR(RegisterSpecInvalid);
QCW_DEFINE_ERROR(NotZeroError);
QCW_DEFINE_ERROR(DistinguishingPromiseViolated);
QCW_DEFINE_ERROR(BudgetExhausted);

// cli / catalog
QCW_DEFINE_ERROR(UnknownFunction);
QCW_DEFINE_ERROR(UnknownMeasure);
QCW_DEFINE_ERROR(UnknownExperiment);
QCW_DEFINE_ERROR(ParseError);

#undef QCW_DEFINE_ERROR

}  // namespace qcw
