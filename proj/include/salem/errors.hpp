/* Error types shared across the library. */
#ifndef SALEM_ERRORS_HPP
#define SALEM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace salem {

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, long line = -1)
        : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_number(line) {}
    long line_number;
};

struct NotClassified : std::runtime_error {
    explicit NotClassified(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientDigits : std::runtime_error {
    explicit InsufficientDigits(const std::string& what) : std::runtime_error(what) {}
};

struct StructureError : std::runtime_error {
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

struct PrecisionExceeded : std::runtime_error {
    explicit PrecisionExceeded(const std::string& what) : std::runtime_error(what) {}
};

/* Internal defect: a condition the library guarantees by construction failed. */
struct InternalDefect : std::logic_error {
    explicit InternalDefect(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const char* msg) {
    if (!cond) throw InternalDefect(msg);
}

} // namespace salem

#endif
