#ifndef GRPTOOL_ERROR_HPP
#define GRPTOOL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace grptool {

class error : public std::runtime_error {
public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text: cycle expressions, .grp files, catalog specs.
class parse_error : public error {
public:
  explicit parse_error(const std::string& msg) : error(msg) {}
};

// Bad arguments or violated preconditions, from the API or the command line.
class usage_error : public error {
public:
  explicit usage_error(const std::string& msg) : error(msg) {}
};

// An enumeration cap or search budget was exceeded.
class resource_error : public error {
public:
  explicit resource_error(const std::string& msg) : error(msg) {}
};

// Internal consistency failure. Indicates a bug, never a valid outcome.
class invariant_error : public error {
public:
  explicit invariant_error(const std::string& msg) : error(msg) {}
};

} // namespace grptool

#endif
