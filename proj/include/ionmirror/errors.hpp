#pragma once

#include <stdexcept>

namespace ionmirror {

// Base type for everything thrown by this library.
struct SimulationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define IONMIRROR_ERROR_TYPE(Name) \
    struct Name : SimulationError { using SimulationError::SimulationError; }

// Space / state construction
IONMIRROR_ERROR_TYPE(InvalidDimension);
IONMIRROR_ERROR_TYPE(UnknownAxis);
IONMIRROR_ERROR_TYPE(MissingAxis);
IONMIRROR_ERROR_TYPE(UnknownLevel);
IONMIRROR_ERROR_TYPE(CutoffExceeded);
IONMIRROR_ERROR_TYPE(NormZero);
IONMIRROR_ERROR_TYPE(SpaceMismatch);

// Model parameters
IONMIRROR_ERROR_TYPE(InvalidParameter);
IONMIRROR_ERROR_TYPE(ZeroDetuning);
IONMIRROR_ERROR_TYPE(WrongElectronicDim);
IONMIRROR_ERROR_TYPE(AxisMismatch);
IONMIRROR_ERROR_TYPE(DegenerateEtas);

// Propagation
IONMIRROR_ERROR_TYPE(NotHermitian);
IONMIRROR_ERROR_TYPE(EigFailure);
IONMIRROR_ERROR_TYPE(StepTooLarge);
IONMIRROR_ERROR_TYPE(UnitarityLost);

// Gate-level verification
IONMIRROR_ERROR_TYPE(ProbeNotGround);
IONMIRROR_ERROR_TYPE(NotParityEigenstate);
IONMIRROR_ERROR_TYPE(AnticommutationFailure);
IONMIRROR_ERROR_TYPE(RatioTooSmall);

// Tool boundary
IONMIRROR_ERROR_TYPE(ConfigError);
IONMIRROR_ERROR_TYPE(IoError);

#undef IONMIRROR_ERROR_TYPE

} // namespace ionmirror
