#pragma once

#include <stdexcept>
#include <string>

namespace cardlogic {

// Raised for malformed input text. Carries the 1-based source position.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line(line),
          column(column) {}

    int line;
    int column;
};

// Raised when a caller violates a documented precondition (e.g. asking for
// relations of an inconsistent theory, or inflating a base structure to a
// finite size).
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& message)
        : std::runtime_error(message) {}
};

// Raised when one of the library's internal invariants fails.  Every
// construction in this library is guarded by explicit runtime claims; a
// violated claim is a bug, and the label names the claim that failed.
class internal_error : public std::runtime_error {
public:
    explicit internal_error(const std::string& message)
        : std::runtime_error(message) {}
};

namespace detail {
[[noreturn]] inline void check_failed(const char* label, const char* file, int line) {
    throw internal_error(std::string(label) + " violated at " + file + ":" +
                         std::to_string(line));
}
}  // namespace detail

// Always-on invariant check.  `label` should name the claim being enforced
// (e.g. "C-ladder-monotone"), so a failure identifies the broken guarantee.
#define CARDLOGIC_CHECK(cond, label)                                    \
    do {                                                                \
        if (!(cond)) ::cardlogic::detail::check_failed(label, __FILE__, __LINE__); \
    } while (0)

}  // namespace cardlogic
