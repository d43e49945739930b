#pragma once

#include <stdexcept>
#include <string>

namespace ca {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingVariable : Error {
    using Error::Error;
};
struct BadShape : Error {
    using Error::Error;
};
struct QuiverMismatch : Error {
    using Error::Error;
};
struct CyclicQuiver : Error {
    using Error::Error;
};
struct GeneratorMismatch : Error {
    using Error::Error;
};
struct ParameterMismatch : Error {
    using Error::Error;
};
struct BadParameter : Error {
    using Error::Error;
};
struct NotNilpotent : Error {
    using Error::Error;
};
struct InvalidTable : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

}  // namespace ca
