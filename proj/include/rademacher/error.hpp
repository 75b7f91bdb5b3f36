#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rademacher {

// Every failure the library reports carries one of these codes. The CLI
// prints the code name verbatim, so the spellings are part of the interface.
enum class ErrorCode {
    determinant_mismatch,
    divisibility_violation,
    not_odd_prime,
    prime_mismatch,
    precondition_violation,
    not_an_edge,
    wrong_base_edge,
    domain_error,
    parse_error,
    usage_error,
    internal_error,
};

std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace rademacher
