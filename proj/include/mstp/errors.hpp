#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mstp {

using NodeId = int;

/// Malformed input or a violated precondition (bad instance file, negative
/// attribute, unknown edge, NaN objective, ...).
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The candidate edge set does not connect every node.
class Infeasible : public std::runtime_error {
public:
  Infeasible(const std::string& what, std::vector<std::vector<NodeId>> components)
      : std::runtime_error(what), components_(std::move(components)) {}

  const std::vector<std::vector<NodeId>>& components() const noexcept { return components_; }

private:
  std::vector<std::vector<NodeId>> components_;
};

class IoError : public std::runtime_error {
public:
  IoError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

} // namespace mstp
