#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace arrform {

/// A computation declined on mathematical grounds (a hypothesis fails), as
/// opposed to malformed input, which throws std::invalid_argument.
class Refusal : public std::runtime_error {
 public:
  Refusal(const std::string& what, std::vector<std::string> witnesses = {})
      : std::runtime_error(what), witnesses_(std::move(witnesses)) {}

  const std::vector<std::string>& witnesses() const { return witnesses_; }

 private:
  std::vector<std::string> witnesses_;
};

}  // namespace arrform
