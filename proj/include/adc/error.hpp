#pragma once

#include <stdexcept>
#include <string>

namespace adc {

enum class ErrorKind {
    UnknownBasisElement,
    IdCollision,
    MissingBipointing,
    NotComposable,
    BoundExceeded,
    SearchBudgetExceeded,
    NotASubcomplex,
    IncompatibleIdentification,
    NotParallel,
    StaleId,
    InvalidChainMap,
    NotUnital,
    InvalidCell,
    ParseError,
    SchemaError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    // Resource conditions are not findings; callers report them separately.
    bool is_resource_limit() const noexcept {
        return kind_ == ErrorKind::BoundExceeded || kind_ == ErrorKind::SearchBudgetExceeded;
    }

private:
    ErrorKind kind_;
};

} // namespace adc
