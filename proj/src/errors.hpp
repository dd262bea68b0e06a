#pragma once

#include <stdexcept>
#include <string>

namespace sgc {

// Operation applied outside its domain (zero expr degree, trig factor under
// the on-shell tau derivative, unit/mode-2 sector in a current decomposition).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A table or series is too shallow for the requested order.
struct TruncationError : std::runtime_error {
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// A series division by a power of the formal parameter hit a nonzero low
// coefficient that should have vanished identically.
struct ShiftError : std::runtime_error {
    explicit ShiftError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An edge of an immersed graph connects points that are neither coincident
// nor null separated.
struct InvalidImmersion : std::runtime_error {
    explicit InvalidImmersion(const std::string& what) : std::runtime_error(what) {}
};

struct SlotMismatch : std::runtime_error {
    explicit SlotMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct CacheError : std::runtime_error {
    explicit CacheError(const std::string& what) : std::runtime_error(what) {}
};

struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sgc
