#ifndef SYMPROD_ERRORS_HPP
#define SYMPROD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symprod {

// Raised when an exact evaluation or limit hits a genuine pole.
class PoleError : public std::runtime_error {
public:
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text: numbers, polynomials, or structured documents.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A loaded model or class violates a structural invariant. `code` names the
// violated invariant ("commutativity", "associativity", "unit", "degree",
// "d1-identity", "unit-slot", "index-range", "unknown-label", ...).
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// sigma and chi of a signature series must have equal parity.
class ParityError : public std::runtime_error {
public:
    explicit ParityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace symprod

#endif
