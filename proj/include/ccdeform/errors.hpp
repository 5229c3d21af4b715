#pragma once
#include <stdexcept>
#include <string>

namespace ccdeform {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define CCDEFORM_ERROR_TYPE(Name)                                   \
    struct Name : Error {                                           \
        explicit Name(const std::string& msg) : Error(msg) {}       \
    }

CCDEFORM_ERROR_TYPE(NotImmersed);
CCDEFORM_ERROR_TYPE(TooCoarse);
CCDEFORM_ERROR_TYPE(GridMismatch);
CCDEFORM_ERROR_TYPE(DegenerateInput);
CCDEFORM_ERROR_TYPE(NotInterior);
CCDEFORM_ERROR_TYPE(OverlapFailure);
CCDEFORM_ERROR_TYPE(AxisNotOrthogonal);
CCDEFORM_ERROR_TYPE(TargetBelowCurrent);
CCDEFORM_ERROR_TYPE(NoSignChange);
CCDEFORM_ERROR_TYPE(OmegaOverflow);
CCDEFORM_ERROR_TYPE(DegenerateLengths);
CCDEFORM_ERROR_TYPE(DeltaTooLarge);
CCDEFORM_ERROR_TYPE(ChordTooShort);
CCDEFORM_ERROR_TYPE(SupportTooLarge);
CCDEFORM_ERROR_TYPE(InfeasibleSchedule);
CCDEFORM_ERROR_TYPE(NotPositiveCurvature);
CCDEFORM_ERROR_TYPE(FlatTantrix);
CCDEFORM_ERROR_TYPE(CertificationFailed);
CCDEFORM_ERROR_TYPE(CurvesIntersect);
CCDEFORM_ERROR_TYPE(NotEmbedded);
CCDEFORM_ERROR_TYPE(NoCurvature);
CCDEFORM_ERROR_TYPE(PerturbationFailed);
CCDEFORM_ERROR_TYPE(SchemaError);
CCDEFORM_ERROR_TYPE(UnknownPreset);
CCDEFORM_ERROR_TYPE(CurvatureVanishes);

#undef CCDEFORM_ERROR_TYPE

} // namespace ccdeform
