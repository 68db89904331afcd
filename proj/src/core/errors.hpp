#ifndef CIRCLELAB_ERRORS_HPP
#define CIRCLELAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cl {

// Thrown when a requested table/enumeration exceeds the configured ceiling.
class capacity_error : public std::runtime_error {
public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a search or formula has no feasible result (e.g. sigma numerator <= 0).
class infeasible_error : public std::runtime_error {
public:
  explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

// Global table ceiling, overridable via CIRCLELAB_MAX_TABLE.
std::size_t table_ceiling();

}  // namespace cl

#endif
