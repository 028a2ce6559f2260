#pragma once

#include <stdexcept>
#include <string>

namespace bsideal {

// Bad mathematical input (malformed tuple, wrong signature, out-of-domain
// argument). CLI maps this family, along with ParseError, to exit code 1.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured budget ran out (S-pair count, degree caps, system size...).
// Deliberately loud: computations never return silently truncated results.
// CLI maps this to exit code 2.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& limit, const std::string& detail)
        : std::runtime_error("resource limit '" + limit + "' exceeded: " + detail),
          limit_(limit) {}
    const std::string& limit() const { return limit_; }

private:
    std::string limit_;
};

}  // namespace bsideal
