#pragma once

#include <stdexcept>
#include <string>

namespace totalmatch {

/// Malformed input: bad ids, parse failures, invalid parameters.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold for its argument
/// (e.g. a cycle handed to a forest-only routine).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Instance exceeds a configured enumeration cap.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::size_t size, std::size_t cap)
        : std::runtime_error(what), size_(size), cap_(cap) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t size_;
    std::size_t cap_;
};

}  // namespace totalmatch
