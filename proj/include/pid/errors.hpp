#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pid {

/// Base class for all domain errors. `name()` is the stable machine-readable
/// identifier that the CLI prints on stderr before exiting with code 2.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct NegativeProbability : Error {
    explicit NegativeProbability(const std::string& w) : Error("NegativeProbability", w) {}
};

struct NotNormalized : Error {
    explicit NotNormalized(const std::string& w) : Error("NotNormalized", w) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& w) : Error("ShapeMismatch", w) {}
};

struct DegenerateCondition : Error {
    explicit DegenerateCondition(const std::string& w) : Error("DegenerateCondition", w) {}
};

struct SupportMismatch : Error {
    explicit SupportMismatch(const std::string& w) : Error("SupportMismatch", w) {}
};

struct EmptyInput : Error {
    explicit EmptyInput(const std::string& w) : Error("EmptyInput", w) {}
};

struct NoiseUnsupported : Error {
    explicit NoiseUnsupported(const std::string& w) : Error("NoiseUnsupported", w) {}
};

struct UnknownLabel : Error {
    explicit UnknownLabel(const std::string& w) : Error("UnknownLabel", w) {}
};

struct InvalidAlphabet : Error {
    explicit InvalidAlphabet(const std::string& w) : Error("InvalidAlphabet", w) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("ParseError", w) {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& w) : Error("InvalidArgument", w) {}
};

} // namespace pid
