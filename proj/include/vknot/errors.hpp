#pragma once

#include <stdexcept>
#include <string>

namespace vknot {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    enum class Kind { MalformedToken, CrossingCountError, RoleError, SignMismatch };

    ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class NotDivisible : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

// Zero substituted into a negative power.
class EvaluationError : public Error {
public:
    using Error::Error;
};

class SizeLimit : public Error {
public:
    using Error::Error;
};

class PatternNotFound : public Error {
public:
    using Error::Error;
};

class PatternViolation : public Error {
public:
    using Error::Error;
};

class MixedEndpoints : public Error {
public:
    using Error::Error;
};

class ModulusMismatch : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace vknot
