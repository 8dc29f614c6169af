#pragma once

#include <stdexcept>
#include <string>

namespace feec {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define FEEC_DEFINE_ERROR(Name)                                        \
    struct Name : Error {                                              \
        explicit Name(const std::string& what = #Name) : Error(what) {} \
    }

FEEC_DEFINE_ERROR(InvalidRange);
FEEC_DEFINE_ERROR(NotDisjoint);
FEEC_DEFINE_ERROR(OutOfRange);
FEEC_DEFINE_ERROR(Malformed);
FEEC_DEFINE_ERROR(DegreeTooLow);
FEEC_DEFINE_ERROR(ShapeMismatch);
FEEC_DEFINE_ERROR(NotBarycentric);
FEEC_DEFINE_ERROR(NotTopDegree);
FEEC_DEFINE_ERROR(NotAFace);
FEEC_DEFINE_ERROR(NotInSpace);
FEEC_DEFINE_ERROR(NonUniformDimension);
FEEC_DEFINE_ERROR(IntersectionNotAFace);
FEEC_DEFINE_ERROR(NotSingleValued);
FEEC_DEFINE_ERROR(FaceNotInComplex);
FEEC_DEFINE_ERROR(ResidueNotTraceFree);
FEEC_DEFINE_ERROR(DimensionMismatch);
FEEC_DEFINE_ERROR(NotSquare);
FEEC_DEFINE_ERROR(Singular);
FEEC_DEFINE_ERROR(Unsupported);

#undef FEEC_DEFINE_ERROR

} // namespace feec
