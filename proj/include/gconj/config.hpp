#pragma once

#include <map>
#include <string>
#include <string_view>

namespace gconj {

/// Flat key=value run configuration. `#` starts a comment, blank lines are
/// ignored, whitespace around keys and values is trimmed. Callers layer
/// command-line flags on top: a flag always overrides the file.
class Config {
public:
  /// Throws std::runtime_error as "path:LINE: reason" on a malformed line.
  static Config load(const std::string& path);

  /// Parses config text (same rules); `origin` names the source in errors.
  static Config parse(std::string_view text, const std::string& origin = "<config>");

  bool has(std::string_view key) const;
  /// Value for key, or `fallback` when absent.
  std::string get(std::string_view key, std::string_view fallback = "") const;

  const std::map<std::string, std::string>& entries() const { return values_; }

private:
  std::map<std::string, std::string> values_;
};

}  // namespace gconj
