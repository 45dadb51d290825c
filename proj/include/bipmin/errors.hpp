#ifndef BIPMIN_ERRORS_HPP
#define BIPMIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bipmin {

enum class Err {
    DuplicateVertex,
    UnknownEndpoint,
    MonochromaticEdge,
    SelfLoop,
    DuplicateEdge,
    UnknownVertex,
    UnknownEdge,
    DifferentSides,
    SameVertex,
    NotACycle,
    NotAPath,
    NotAdmissible,
    BudgetExhausted,
    SideTooSmall,
    IsK22,
    WrongDegree,
    NotLaman,
    MinDegreeNot3,
    BadSides,
    BadParameter,
    CapExceeded,
};

const char* err_name(Err e);

// All validation failures carry a code plus a message naming the offending
// element, so callers can match on the code and humans can read the message.
class GraphError : public std::runtime_error {
public:
    GraphError(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
    throw GraphError(code, msg);
}

} // namespace bipmin

#endif
