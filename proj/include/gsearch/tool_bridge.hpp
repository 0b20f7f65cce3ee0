#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsearch/error.hpp"

namespace gsearch::tools {

// Environment variable naming the directory that holds geng, shortg, ...
inline constexpr const char* kToolDirEnv = "GTOOLS_DIR";

struct ToolSpec {
  std::filesystem::path tool_dir;  // empty: consult kToolDirEnv, then PATH
  std::string command;
  std::vector<std::string> args;
};

// The executable could not be found or started. Callers treat this as "skip".
class ToolUnavailable : public Error {
 public:
  using Error::Error;
};

// The child ran but exited abnormally; carries its standard error.
class ToolFailed : public Error {
 public:
  ToolFailed(const std::string& what, int status, std::string stderr_text)
      : Error(what), status_(status), stderr_(std::move(stderr_text)) {}
  int status() const noexcept { return status_; }
  const std::string& stderr_text() const noexcept { return stderr_; }

 private:
  int status_;
  std::string stderr_;
};

// Resolution order: spec.tool_dir, then $GTOOLS_DIR, then PATH. On PATH a
// distribution-prefixed name ("nauty-geng") is accepted as well. Throws
// ToolUnavailable when nothing executable is found, FormatError on an
// empty command or arguments containing newlines.
std::filesystem::path resolve_tool(const ToolSpec& spec);

// Non-throwing probe.
std::optional<std::filesystem::path> find_tool(const ToolSpec& spec);

using LineSink = std::function<void(std::string_view)>;

// Runs the tool with no input and delivers each output line (without the
// newline) as it arrives. Standard error is captured and attached to
// ToolFailed if the child exits nonzero or is killed; it is discarded on
// success.
void exec_stream(const ToolSpec& spec, const LineSink& on_line);
std::vector<std::string> exec_stream(const ToolSpec& spec);

// Writes every input line, closes the child's standard input, and collects
// output lines until EOF. Output is drained while input is still being
// written, so a child that answers early cannot deadlock the exchange.
std::vector<std::string> exec_bidi(const ToolSpec& spec, std::span<const std::string> input);

}  // namespace gsearch::tools
