#pragma once

#include <stdexcept>
#include <string>

namespace edgeideals {

// Base class for all library errors. `input` separates bad user input from
// broken internal invariants; the CLI maps the two to different exit codes.
class Error : public std::runtime_error {
public:
    Error(const std::string& msg, bool input)
        : std::runtime_error(msg), input_(input) {}
    bool is_input_error() const { return input_; }

private:
    bool input_;
};

class SelfLoop : public Error {
public:
    explicit SelfLoop(const std::string& m) : Error("SelfLoop: " + m, true) {}
};

class DuplicateEdge : public Error {
public:
    explicit DuplicateEdge(const std::string& m) : Error("DuplicateEdge: " + m, true) {}
};

class CycleDetected : public Error {
public:
    explicit CycleDetected(const std::string& m) : Error("CycleDetected: " + m, true) {}
};

class NoEdges : public Error {
public:
    explicit NoEdges(const std::string& m) : Error("NoEdges: " + m, true) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& m) : Error("DomainError: " + m, true) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& m) : Error("ParseError: " + m, true) {}
};

class NotStretched : public Error {
public:
    explicit NotStretched(const std::string& m) : Error("NotStretched: " + m, true) {}
};

class NotForestSupport : public Error {
public:
    explicit NotForestSupport(const std::string& m) : Error("NotForestSupport: " + m, true) {}
};

class IsolatedElement : public Error {
public:
    explicit IsolatedElement(const std::string& m) : Error("IsolatedElement: " + m, true) {}
};

class NotASubtree : public Error {
public:
    explicit NotASubtree(const std::string& m) : Error("NotASubtree: " + m, true) {}
};

class SupportMismatch : public Error {
public:
    explicit SupportMismatch(const std::string& m) : Error("SupportMismatch: " + m, true) {}
};

class PreconditionViolated : public Error {
public:
    explicit PreconditionViolated(const std::string& m) : Error("PreconditionViolated: " + m, true) {}
};

class InvalidSystem : public Error {
public:
    explicit InvalidSystem(const std::string& m) : Error("InvalidSystem: " + m, true) {}
};

class CapExceeded : public Error {
public:
    explicit CapExceeded(const std::string& m) : Error("CapExceeded: " + m, true) {}
};

class NotMinimal : public Error {
public:
    explicit NotMinimal(const std::string& m) : Error("NotMinimal: " + m, true) {}
};

// Violation of an invariant the library itself is responsible for.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& m) : Error("InternalError: " + m, false) {}
};

} // namespace edgeideals
