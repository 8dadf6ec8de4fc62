#pragma once

#include <stdexcept>
#include <string>

namespace ddbar {

/* Error taxonomy, chosen so the CLI can map each class to one exit code. */

// Malformed input document or failed structural validation.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A d(phi^i) carries a (0,2) term, so the structure is not integrable.
struct IntegrabilityError : ParseError {
    using ParseError::ParseError;
};

// Reference to a generator or builtin that does not exist.
struct UnknownNameError : ParseError {
    using ParseError::ParseError;
};

// Complex fails d^2 = 0 / anticommutation, or verdict criteria disagree.
struct InvalidComplexError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Formula requested outside its proven range without the override flag.
struct ConjecturalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Index, shape, or argument out of range.
struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Broken internal invariant (e.g. a containment assertion); engine bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace ddbar
