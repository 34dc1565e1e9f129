#pragma once

#include <stdexcept>
#include <string>

namespace noisim {

// Process exit codes shared by the CLI and the error hierarchy:
// 0 ok, 1 usage, 2 data error, 3 numeric failure.
enum class ExitCode : int { ok = 0, usage = 1, data = 2, numeric = 3 };

class Error : public std::runtime_error {
public:
    Error(ExitCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ExitCode code() const { return code_; }

private:
    ExitCode code_;
};

// Malformed input bytes (bad WAV header, bad manifest line, ...).
struct FormatError : Error {
    explicit FormatError(const std::string& msg) : Error(ExitCode::data, msg) {}
};

// Well-formed but unsupported input (stereo WAV, 8-bit PCM, ...).
struct UnsupportedFormatError : Error {
    explicit UnsupportedFormatError(const std::string& msg) : Error(ExitCode::data, msg) {}
};

// Tensor shape disagreement.
struct ShapeError : Error {
    explicit ShapeError(const std::string& msg) : Error(ExitCode::data, msg) {}
};

// A stated precondition was violated by the caller.
struct ContractError : Error {
    explicit ContractError(const std::string& msg) : Error(ExitCode::data, msg) {}
};

// Bad or inconsistent configuration file.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(ExitCode::data, msg) {}
};

// Corrupt, truncated or version-mismatched checkpoint.
struct CheckpointError : Error {
    explicit CheckpointError(const std::string& msg) : Error(ExitCode::data, msg) {}
};

// Numeric failure: non-finite loss, gradient check over tolerance, ...
struct NumericError : Error {
    explicit NumericError(const std::string& msg) : Error(ExitCode::numeric, msg) {}
};

} // namespace noisim
