#pragma once

#include <stdexcept>
#include <string>

namespace skelact {

// Base class for all toolkit errors. Subclasses map onto the CLI's
// exit-code taxonomy (usage/config/data/verification).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NameError : Error {
    using Error::Error;
};
struct FormatError : Error {
    using Error::Error;
};
struct LengthError : Error {
    using Error::Error;
};
struct ShapeError : Error {
    using Error::Error;
};
struct DegenerateInput : Error {
    using Error::Error;
};
struct MissingMetadata : Error {
    using Error::Error;
};
struct CoordTypeError : Error {
    using Error::Error;
};
struct SpecError : Error {
    using Error::Error;
};
struct LabelError : Error {
    using Error::Error;
};
struct TapeError : Error {
    using Error::Error;
};
struct DataError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace skelact
