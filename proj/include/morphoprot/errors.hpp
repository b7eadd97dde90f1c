#pragma once

#include <stdexcept>
#include <string>

namespace morphoprot {

// Base class for all recoverable errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- ingest ----------------------------------------------------------------

class NoAtomsError : public Error {
public:
    explicit NoAtomsError(const std::string& msg = "no ATOM/HETATM records found")
        : Error(msg) {}
};

class MalformedRecordError : public Error {
public:
    MalformedRecordError(std::size_t line_number, const std::string& detail)
        : Error("malformed record at line " + std::to_string(line_number) + ": " + detail),
          line_number(line_number) {}
    std::size_t line_number;
};

class InvalidIdError : public Error {
public:
    explicit InvalidIdError(const std::string& id)
        : Error("invalid PDB id: \"" + id + "\"") {}
};

class NetworkUnavailableError : public Error {
public:
    explicit NetworkUnavailableError(const std::string& msg) : Error(msg) {}
};

class NotFoundError : public Error {
public:
    explicit NotFoundError(const std::string& msg) : Error(msg) {}
};

class EmptySelectionError : public Error {
public:
    explicit EmptySelectionError(const std::string& msg = "selection matched no atoms")
        : Error(msg) {}
};

// ---- grid / morphology -----------------------------------------------------

class UnsupportedSizeError : public Error {
public:
    explicit UnsupportedSizeError(const std::string& msg) : Error(msg) {}
};

class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& msg = "grid dimensions differ")
        : Error(msg) {}
};

// ---- fractal ---------------------------------------------------------------

class EmptyGridError : public Error {
public:
    explicit EmptyGridError(const std::string& msg = "grid has no set pixels")
        : Error(msg) {}
};

class TooFewScalesError : public Error {
public:
    explicit TooFewScalesError(const std::string& msg = "need at least 3 box sizes")
        : Error(msg) {}
};

// ---- pipelines -------------------------------------------------------------

class ParamsMismatchError : public Error {
public:
    explicit ParamsMismatchError(const std::string& msg =
                                     "signatures were computed with different parameters")
        : Error(msg) {}
};

} // namespace morphoprot
