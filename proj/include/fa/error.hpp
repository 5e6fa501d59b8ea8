#ifndef FA_ERROR_HPP
#define FA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace fa {

enum class ErrorCode {
    EmptyStateSet,
    InvalidStateName,
    InvalidSymbol,
    DuplicateSymbolInSigma,
    StartNotInStates,
    FinalNotInStates,
    RuleReferencesUnknownState,
    RuleReadsUnknownSymbol,
    NondeterministicRules,
    IncompleteWithNoDead,
    WordSymbolNotInSigma,
    MalformedDocument,
    UnknownKind,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Raised by machine constructors, word checks and the machine-file reader.
///
/// `where()` is a JSON-pointer style path into the constructor arguments
/// ("/start", "/rules/3", ...) or empty when the error is not tied to a
/// single component.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::string where = {})
        : std::runtime_error(std::move(message)), code_(code), where_(std::move(where)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& where() const noexcept { return where_; }

private:
    ErrorCode code_;
    std::string where_;
};

} // namespace fa

#endif
