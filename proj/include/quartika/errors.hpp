#ifndef QUARTIKA_ERRORS_HPP
#define QUARTIKA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quartika {

// Domain errors carry a stable name so the CLI can report them uniformly.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

struct NotASquareError : Error {
    explicit NotASquareError(const std::string& what = "value is not a perfect square")
        : Error("NotASquare", what) {}
};

struct NegativeRadicandError : Error {
    explicit NegativeRadicandError(const std::string& what = "square root of negative value")
        : Error("NegativeRadicand", what) {}
};

struct VerificationError : Error {
    explicit VerificationError(const std::string& what = "quadruple fails exact verification")
        : Error("VerificationFailure", what) {}
};

struct DegenerateCurveError : Error {
    explicit DegenerateCurveError(const std::string& what = "curve discriminant vanishes")
        : Error("DegenerateCurve", what) {}
};

struct OppositeParityError : Error {
    explicit OppositeParityError(const std::string& what = "parameters have opposite parity")
        : Error("OppositeParity", what) {}
};

struct DegenerateFamilyError : Error {
    explicit DegenerateFamilyError(const std::string& what = "family parameters degenerate")
        : Error("DegenerateFamily", what) {}
};

struct ExceptionalPointError : Error {
    explicit ExceptionalPointError(const std::string& what = "point lies on a map's exceptional set")
        : Error("ExceptionalPoint", what) {}
};

struct DegenerateStepError : Error {
    explicit DegenerateStepError(const std::string& what = "descent step degenerates")
        : Error("DegenerateStep", what) {}
};

struct ZeroQuarticError : Error {
    explicit ZeroQuarticError(const std::string& what = "leading quartic coefficient vanishes")
        : Error("ZeroQuartic", what) {}
};

struct NoNontrivialDirectionError : Error {
    explicit NoNontrivialDirectionError(const std::string& what = "no nontrivial tangent direction")
        : Error("NoNontrivialDirection", what) {}
};

struct CheckpointError : Error {
    explicit CheckpointError(const std::string& what = "checkpoint file unusable")
        : Error("CheckpointCorruption", what) {}
};

} // namespace quartika

#endif
