#pragma once

#include <stdexcept>
#include <string>

namespace quadfact {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed element or ideal text.
class parse_error : public error {
public:
    using error::error;
};

/// Precondition violation: mismatched ring parameter, non-prime input,
/// zero/unit where a nonzero nonunit is required, and so on.
class domain_error : public error {
public:
    using error::error;
};

/// Input exceeds a configured bound or the checked integer width.
class capacity_error : public error {
public:
    using error::error;
};

}  // namespace quadfact
