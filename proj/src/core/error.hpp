#pragma once

#include <stdexcept>
#include <string>

namespace tinycam {

// Error categories. Values line up with the CLI exit codes and the C API
// status codes, so one enum travels the whole stack.
enum class ErrorCode : int {
    Io = 2,            // file missing, unreadable, short read/write
    Format = 3,        // malformed container or image file
    Inconsistent = 4,  // mutually inconsistent inputs (map vs payload, dims)
    Model = 5,         // degenerate geometry, fold-over distortion model
    Degenerate = 6,    // degenerate numeric input (all-zero tensor, ...)
    Config = 7,        // scenario config violates the schema
    Invalid = 8        // bad argument
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string msg)
        : std::runtime_error(std::move(msg)), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

}  // namespace tinycam
