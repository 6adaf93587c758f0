#ifndef SNMOD_ERRORS_HPP
#define SNMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace snmod {

// Invalid mathematical input (bad partition, wrong modulus, degree mismatch, ...).
// CLI maps this to exit code 2.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource cap was exceeded (dimension cap, word cap, memory budget).
// CLI maps this to exit code 3.
struct cap_error : std::runtime_error {
  explicit cap_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace snmod

#endif
