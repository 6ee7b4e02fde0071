#pragma once

#include <stdexcept>
#include <string>

namespace wbsearch {

struct InvalidDimension : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OutOfBounds : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Weight arithmetic exceeded 64 bits.
struct WeightOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

struct InvalidStart : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed scenario or batch configuration.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FileError : std::runtime_error {
    FileError(const std::string& path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(path) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace wbsearch
