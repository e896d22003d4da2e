#pragma once

#include <stdexcept>
#include <string>

namespace linkhom {

// Base for all domain errors so callers can catch one type at the batch layer.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonIntegralDivisor : Error {
    explicit NonIntegralDivisor(const std::string& msg) : Error(msg) {}
};

struct PoleAtPoint : Error {
    explicit PoleAtPoint(const std::string& msg) : Error(msg) {}
};

struct NonPrimitiveWeights : Error {
    explicit NonPrimitiveWeights(const std::string& msg) : Error(msg) {}
};

struct InvalidDegree : Error {
    explicit InvalidDegree(const std::string& msg) : Error(msg) {}
};

struct NonIntegralMilnor : Error {
    explicit NonIntegralMilnor(const std::string& msg) : Error(msg) {}
};

struct NonIntegralOrlikC : Error {
    explicit NonIntegralOrlikC(const std::string& msg) : Error(msg) {}
};

struct CoprimalityViolated : Error {
    explicit CoprimalityViolated(const std::string& msg) : Error(msg) {}
};

struct DimensionUnsupported : Error {
    explicit DimensionUnsupported(const std::string& msg) : Error(msg) {}
};

struct WitnessNotFound : Error {
    explicit WitnessNotFound(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    ParseError(int line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

struct ScaleExceeded : Error {
    explicit ScaleExceeded(const std::string& msg) : Error(msg) {}
};

struct NotAPolynomial : Error {
    explicit NotAPolynomial(const std::string& msg) : Error(msg) {}
};

}  // namespace linkhom
