#ifndef RATDECOMP_ERROR_HPP
#define RATDECOMP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ratdecomp {

// Stable error codes. The CLI prints code_name() so scripts can match on it.
enum class ErrorCode {
    NonPrimeModulus,
    ReducibleExtensionModulus,
    UnsupportedTower,
    MissingModulus,
    BadFieldDescriptor,
    DivisionByZero,
    MixedFields,
    FieldTooLarge,
    ZeroInput,
    ZeroDenominator,
    ConstantInner,
    DegeneratePoints,
    NotMonic,
    DegreeNotDivisible,
    WildRoot,
    ConstantBase,
    WildInput,
    BadDegree,
    SearchSpaceTooLarge,
    InfiniteField,
    ConstantRightComponent,
    DifferentComposites,
    NotPolynomialComposite,
    NotEnoughSamplePoints,
    GroupInvariantViolated,
    SeedExhaustion,
    LeftDivisionFailed,
    WildComponent,
    WildDegree,
    BadArgument,
    SyntaxError,
    UnknownSymbol,
    Internal,
};

std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Parse errors also carry the byte offset into the input text.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, const std::string& what, std::size_t position)
        : Error(code, what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace ratdecomp

#endif
