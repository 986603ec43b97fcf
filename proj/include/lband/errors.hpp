// Error taxonomy shared by the library and the CLI.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lband {

/// Base of every library error. `kind()` is a stable machine-readable tag;
/// the CLI maps kinds onto exit codes (usage/parse -> 2, domain -> 3).
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct EmptyBandError : Error {
    explicit EmptyBandError(const std::string& msg = "band must contain at least one entry")
        : Error("EmptyBand", msg) {}
};

struct IndexOutOfRangeError : Error {
    explicit IndexOutOfRangeError(const std::string& msg) : Error("IndexOutOfRange", msg) {}
};

struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& msg) : Error("DimensionMismatch", msg) {}
};

struct NotSymmetricError : Error {
    explicit NotSymmetricError(const std::string& msg) : Error("NotSymmetric", msg) {}
};

/// Raised when a closed form requires invertibility that the band lacks.
/// Carries which condition failed: a zero trailing entry, or a tie between
/// neighbours a_k = a_{k+1} (index = k, 1-based), or a dense pivot breakdown.
struct SingularMatrixError : Error {
    enum class Reason { ZeroLastEntry, EqualNeighbors, DensePivot };

    SingularMatrixError(Reason reason, std::size_t index, const std::string& msg)
        : Error("SingularMatrix", msg), reason(reason), index(index) {}

    Reason reason;
    std::size_t index;
};

struct NoLdlDecompositionError : Error {
    explicit NoLdlDecompositionError(const std::string& msg) : Error("NoLdlDecomposition", msg) {}
};

struct NotPositiveDefiniteError : Error {
    explicit NotPositiveDefiniteError(const std::string& msg) : Error("NotPositiveDefinite", msg) {}
};

struct ZeroNormalizerError : Error {
    explicit ZeroNormalizerError(const std::string& msg) : Error("ZeroNormalizer", msg) {}
};

struct NoConvergenceError : Error {
    explicit NoConvergenceError(const std::string& msg) : Error("NoConvergence", msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("ParseError", msg) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error("UsageError", msg) {}
};

/// True for errors that indicate misuse of the tool rather than a property
/// of the mathematical input (exit code 2 instead of 3).
inline bool is_usage_kind(const std::string& kind) {
    return kind == "ParseError" || kind == "UsageError";
}

} // namespace lband
