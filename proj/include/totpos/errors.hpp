#pragma once

#include <stdexcept>
#include <string>

namespace totpos {

// Base for everything this library throws on purpose.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: bad dimensions, out-of-range indices, unparsable files.
class input_error : public error {
public:
    explicit input_error(const std::string& msg) : error(msg) {}
};

// Input is well-formed but violates a documented operation precondition.
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

// A randomized construction ran out of retries. Never a refutation.
class construction_failure : public error {
public:
    explicit construction_failure(const std::string& msg) : error(msg) {}
};

} // namespace totpos
