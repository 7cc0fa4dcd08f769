#pragma once

#include <stdexcept>
#include <string>

namespace qgt {

// Every failure carries a stable name so the CLI can report it verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define QGT_DEFINE_ERROR(Name)                                                \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what) : Error(#Name, what) {}        \
    };

QGT_DEFINE_ERROR(HalfPowerUnavailable)
QGT_DEFINE_ERROR(ExactModeUnsupported)
QGT_DEFINE_ERROR(DivisionByZero)
QGT_DEFINE_ERROR(InvalidConfig)
QGT_DEFINE_ERROR(LengthMismatch)
QGT_DEFINE_ERROR(CoincidentPoints)
QGT_DEFINE_ERROR(ZeroPoint)
QGT_DEFINE_ERROR(CoincidentOrbit)
QGT_DEFINE_ERROR(BadShape)
QGT_DEFINE_ERROR(ApparentSingularity)
QGT_DEFINE_ERROR(DomainViolation)
QGT_DEFINE_ERROR(NonConvergedQuadrature)
QGT_DEFINE_ERROR(PoleNeighborhood)
QGT_DEFINE_ERROR(NotConverged)
QGT_DEFINE_ERROR(GridTooCoarse)

#undef QGT_DEFINE_ERROR

}  // namespace qgt
