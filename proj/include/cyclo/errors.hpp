#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclo {

// All domain failures carry a stable machine-readable code (listed below) plus a
// human message. The CLI prints "error: <code>: <message>" on stderr and maps
// parse_error -> exit 2, everything else -> exit 3.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Stable error codes.
namespace errc {
inline constexpr std::string_view kappa_zero = "kappa_zero";
inline constexpr std::string_view mode_mismatch = "mode_mismatch";
inline constexpr std::string_view scalar_span = "scalar_span";
inline constexpr std::string_view not_integral = "not_integral";
inline constexpr std::string_view bad_partition = "bad_partition";
inline constexpr std::string_view bad_hyperplane = "bad_hyperplane";
inline constexpr std::string_view degenerate_parameter = "degenerate_parameter";
inline constexpr std::string_view not_addable = "not_addable";
inline constexpr std::string_view w_leq_2v = "w_leq_2v";
inline constexpr std::string_view not_aspherical = "not_aspherical";
inline constexpr std::string_view inconsistent_decomposition = "inconsistent_decomposition";
inline constexpr std::string_view resource_limit = "resource_limit";
inline constexpr std::string_view unsupported_regime = "unsupported_regime";
inline constexpr std::string_view parse_error = "parse_error";
inline constexpr std::string_view overflow = "overflow";
}  // namespace errc

[[noreturn]] inline void fail(std::string_view code, const std::string& message) {
    throw Error(std::string(code), message);
}

}  // namespace cyclo
