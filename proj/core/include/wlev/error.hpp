#pragma once

#include <stdexcept>
#include <string>

namespace wlev {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A frequency outside [0, 1), or a model that cannot be built from its inputs.
class InvalidModel : public Error {
public:
    using Error::Error;
};

/// Malformed external input: UTF-8, model documents, corpus records.
class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace wlev
