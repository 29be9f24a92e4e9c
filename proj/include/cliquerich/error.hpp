#pragma once

#include <stdexcept>
#include <string>

namespace cliquerich {

/// Library-wide exception type. Parse errors carry line context in the message.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cliquerich
