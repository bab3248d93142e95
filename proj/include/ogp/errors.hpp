#pragma once

#include <stdexcept>
#include <string>

namespace ogp {

// Thrown when a computation would exceed a resource guard (enumeration width,
// adjacency size, tensor entry count, ...). Guards are hard errors by design:
// a refused run is reported, never silently truncated. The CLI maps this to a
// dedicated exit code so scripts can tell "refused" from "invalid arguments".
class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ogp
