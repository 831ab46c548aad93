#pragma once

#include <stdexcept>
#include <string>

namespace spinsum {

enum class ErrorKind {
    Parse,          // malformed input text
    Validation,     // a diagram/group/cocycle condition failed
    Arithmetic,     // division by zero, incompatible root orders
    Usage,          // bad arguments to an operation
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline Error parse_error(const std::string& msg, int line = -1, int col = -1) {
    std::string full = msg;
    if (line >= 0) {
        full += " (line " + std::to_string(line);
        if (col >= 0) full += ", col " + std::to_string(col);
        full += ")";
    }
    return Error(ErrorKind::Parse, full);
}

}  // namespace spinsum
