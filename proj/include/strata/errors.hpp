#pragma once

#include <stdexcept>
#include <string>

namespace strata {

// Domain errors carry a stable name; the CLI prints it and exits 1.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define STRATA_DEFINE_ERROR(E)                                        \
    class E : public Error {                                          \
    public:                                                           \
        explicit E(const std::string& what) : Error(#E, what) {}      \
    }

STRATA_DEFINE_ERROR(DegreeMismatch);
STRATA_DEFINE_ERROR(ZeroOrderEntry);
STRATA_DEFINE_ERROR(MinusKEntry);
STRATA_DEFINE_ERROR(DivisionByZero);
STRATA_DEFINE_ERROR(ParseError);
STRATA_DEFINE_ERROR(UnreducibleGenerator);
STRATA_DEFINE_ERROR(MarkingMismatch);
STRATA_DEFINE_ERROR(WrongVerdict);
STRATA_DEFINE_ERROR(NotInfiniteArea);
STRATA_DEFINE_ERROR(NotApplicable);
STRATA_DEFINE_ERROR(NotHNStratum);
STRATA_DEFINE_ERROR(DataFileCorrupt);
STRATA_DEFINE_ERROR(CatalogContradiction);
STRATA_DEFINE_ERROR(InvalidPositions);
STRATA_DEFINE_ERROR(MergedMinusK);
STRATA_DEFINE_ERROR(UnsupportedK);
STRATA_DEFINE_ERROR(NotConnected);
STRATA_DEFINE_ERROR(OddOrderZero);
STRATA_DEFINE_ERROR(MeromorphicUnsupported);
STRATA_DEFINE_ERROR(EmptyStratum);
STRATA_DEFINE_ERROR(UsageError);

#undef STRATA_DEFINE_ERROR

}  // namespace strata
