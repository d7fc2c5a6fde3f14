#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace bicomlab {

/// Outcome of one verification suite run.
struct Report {
  std::string claim;
  int degree = 0;  // 0 when not degree-indexed
  bool pass = false;
  std::vector<std::pair<std::string, long long>> dims;
  std::vector<std::string> notes;

  void dim(const std::string& name, long long value) { dims.emplace_back(name, value); }
  void note(std::string text) { notes.push_back(std::move(text)); }
  /// Records a named check; a failing one flips pass and leaves a note.
  void require(bool ok, const std::string& what);

  nlohmann::json to_json() const;
  std::string str() const;
};

}  // namespace bicomlab
