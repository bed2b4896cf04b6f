#ifndef TORICODE_ERRORS_HPP
#define TORICODE_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace toricode {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input (code files, order specs, serialized data).
class format_error : public error {
public:
    explicit format_error(const std::string& msg) : error(msg) {}
};

/// Operation called outside its domain (bad n, mismatched variable sets, ...).
class domain_error : public error {
public:
    explicit domain_error(const std::string& msg) : error(msg) {}
};

/// A configured budget was exhausted. `partial` marks that a partial result
/// existed when the computation was aborted.
class resource_error : public error {
public:
    explicit resource_error(const std::string& msg, bool partial_result = false)
        : error(msg), partial(partial_result) {}
    bool partial;
};

/// Two routes that must agree disagreed; indicates a bug, not bad input.
class inconsistency_error : public error {
public:
    explicit inconsistency_error(const std::string& msg) : error(msg) {}
};

/// Resource limits for the completion and enumeration engines.
struct Budget {
    std::uint64_t s_pairs = 1'000'000;     // Buchberger pair budget
    std::uint64_t monomials = 10'000'000;  // fiber enumeration budget
};

}  // namespace toricode

#endif
