#include "rademacher/error.hpp"

namespace rademacher {

std::string_view code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::determinant_mismatch: return "determinant_mismatch";
        case ErrorCode::divisibility_violation: return "divisibility_violation";
        case ErrorCode::not_odd_prime: return "not_odd_prime";
        case ErrorCode::prime_mismatch: return "prime_mismatch";
        case ErrorCode::precondition_violation: return "precondition_violation";
        case ErrorCode::not_an_edge: return "not_an_edge";
        case ErrorCode::wrong_base_edge: return "wrong_base_edge";
        case ErrorCode::domain_error: return "domain_error";
        case ErrorCode::parse_error: return "parse_error";
        case ErrorCode::usage_error: return "usage_error";
        case ErrorCode::internal_error: return "internal_error";
    }
    return "internal_error";
}

}  // namespace rademacher
