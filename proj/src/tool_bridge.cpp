#include "gsearch/tool_bridge.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <ctime>

extern char** environ;

namespace gsearch::tools {

namespace {

namespace fs = std::filesystem;

constexpr std::size_t kMaxStderr = 64 * 1024;

bool executable(const fs::path& p) {
  std::error_code ec;
  return fs::is_regular_file(p, ec) && ::access(p.c_str(), X_OK) == 0;
}

class Fd {
 public:
  Fd() = default;
  explicit Fd(int fd) : fd_(fd) {}
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;
  Fd(Fd&& o) noexcept : fd_(std::exchange(o.fd_, -1)) {}
  Fd& operator=(Fd&& o) noexcept {
    if (this != &o) {
      close();
      fd_ = std::exchange(o.fd_, -1);
    }
    return *this;
  }
  ~Fd() { close(); }

  int get() const noexcept { return fd_; }
  bool open() const noexcept { return fd_ >= 0; }
  void close() noexcept {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
  }

 private:
  int fd_ = -1;
};

struct Pipe {
  Fd read;
  Fd write;
};

Pipe make_pipe() {
  std::array<int, 2> fds{};
  if (::pipe2(fds.data(), O_CLOEXEC) != 0) throw Error(std::string("pipe: ") + std::strerror(errno));
  return {Fd(fds[0]), Fd(fds[1])};
}

// Blocks SIGPIPE for the calling thread while a child's stdin is being
// written, and swallows any SIGPIPE raised in the meantime, so a child that
// exits early surfaces as EPIPE instead of killing the process.
class SigpipeGuard {
 public:
  SigpipeGuard() {
    sigemptyset(&set_);
    sigaddset(&set_, SIGPIPE);
    pthread_sigmask(SIG_BLOCK, &set_, &old_);
  }
  ~SigpipeGuard() {
    timespec zero{0, 0};
    while (sigtimedwait(&set_, nullptr, &zero) > 0) {
    }
    pthread_sigmask(SIG_SETMASK, &old_, nullptr);
  }
  SigpipeGuard(const SigpipeGuard&) = delete;
  SigpipeGuard& operator=(const SigpipeGuard&) = delete;

 private:
  sigset_t set_{};
  sigset_t old_{};
};

class LineSplitter {
 public:
  explicit LineSplitter(const LineSink& sink) : sink_(sink) {}
  void feed(std::string_view chunk) {
    buffer_.append(chunk);
    std::size_t start = 0;
    for (std::size_t nl; (nl = buffer_.find('\n', start)) != std::string::npos; start = nl + 1) {
      sink_(std::string_view(buffer_).substr(start, nl - start));
    }
    buffer_.erase(0, start);
  }
  void finish() {
    if (!buffer_.empty()) sink_(buffer_);
    buffer_.clear();
  }

 private:
  const LineSink& sink_;
  std::string buffer_;
};

void validate(const ToolSpec& spec) {
  if (spec.command.empty()) throw FormatError("tool command is empty");
  for (const auto& a : spec.args) {
    if (a.find('\n') != std::string::npos) throw FormatError("tool argument contains a newline");
  }
}

// Spawns the child, pumps `input` into its standard input (then closes it),
// and forwards standard output line by line until EOF.
void run(const ToolSpec& spec, const std::string* input, const LineSink& on_line) {
  validate(spec);
  const fs::path exe = resolve_tool(spec);

  Pipe in = make_pipe();
  Pipe out = make_pipe();
  Pipe err = make_pipe();

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, in.read.get(), STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, out.write.get(), STDOUT_FILENO);
  posix_spawn_file_actions_adddup2(&actions, err.write.get(), STDERR_FILENO);

  std::vector<std::string> argv_storage;
  argv_storage.push_back(spec.command);
  argv_storage.insert(argv_storage.end(), spec.args.begin(), spec.args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  argv.push_back(nullptr);

  pid_t pid = 0;
  const int rc = ::posix_spawn(&pid, exe.c_str(), &actions, nullptr, argv.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  if (rc != 0) throw ToolUnavailable("cannot start " + exe.string() + ": " + std::strerror(rc));

  in.read.close();
  out.write.close();
  err.write.close();
  if (!input) {
    in.write.close();
  } else {
    ::fcntl(in.write.get(), F_SETFL, ::fcntl(in.write.get(), F_GETFL) | O_NONBLOCK);
  }

  SigpipeGuard sigpipe;
  LineSplitter lines(on_line);
  std::string stderr_text;
  std::size_t written = 0;
  bool broken_pipe = false;
  std::array<char, 1 << 16> buf{};

  while (out.read.open() || err.read.open()) {
    std::array<pollfd, 3> fds{};
    std::size_t count = 0;
    if (in.write.open()) fds[count++] = {in.write.get(), POLLOUT, 0};
    if (out.read.open()) fds[count++] = {out.read.get(), POLLIN, 0};
    if (err.read.open()) fds[count++] = {err.read.get(), POLLIN, 0};
    if (::poll(fds.data(), count, -1) < 0) {
      if (errno == EINTR) continue;
      throw Error(std::string("poll: ") + std::strerror(errno));
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (fds[i].revents == 0) continue;
      const int fd = fds[i].fd;
      if (in.write.open() && fd == in.write.get()) {
        const ssize_t n = ::write(fd, input->data() + written, input->size() - written);
        if (n < 0 && errno != EINTR && errno != EAGAIN) {
          broken_pipe = errno == EPIPE;
          in.write.close();
        } else if (n > 0) {
          written += static_cast<std::size_t>(n);
        }
        if (written == input->size()) in.write.close();
        continue;
      }
      const ssize_t n = ::read(fd, buf.data(), buf.size());
      if (n < 0 && errno == EINTR) continue;
      if (n <= 0) {
        if (out.read.open() && fd == out.read.get()) out.read.close();
        else err.read.close();
        continue;
      }
      if (out.read.open() && fd == out.read.get()) {
        lines.feed(std::string_view(buf.data(), static_cast<std::size_t>(n)));
      } else if (stderr_text.size() < kMaxStderr) {
        stderr_text.append(buf.data(), std::min(static_cast<std::size_t>(n), kMaxStderr - stderr_text.size()));
      }
    }
  }
  // Output closed while input was still pending: the child quit reading.
  if (input && in.write.open() && written < input->size()) broken_pipe = true;
  in.write.close();
  lines.finish();

  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (WIFSIGNALED(status)) {
    throw ToolFailed(spec.command + " killed by signal " + std::to_string(WTERMSIG(status)), -WTERMSIG(status),
                     stderr_text);
  }
  if (WIFEXITED(status) && WEXITSTATUS(status) != 0) {
    throw ToolFailed(spec.command + " exited with status " + std::to_string(WEXITSTATUS(status)) +
                         (stderr_text.empty() ? "" : ": " + stderr_text),
                     WEXITSTATUS(status), stderr_text);
  }
  if (broken_pipe) {
    throw ToolFailed(spec.command + " closed its input before reading all of it", 0, stderr_text);
  }
}

}  // namespace

std::optional<fs::path> find_tool(const ToolSpec& spec) {
  if (spec.command.empty()) return std::nullopt;
  if (spec.command.find('/') != std::string::npos) {
    return executable(spec.command) ? std::optional<fs::path>(spec.command) : std::nullopt;
  }
  if (!spec.tool_dir.empty()) {
    const fs::path p = spec.tool_dir / spec.command;
    return executable(p) ? std::optional<fs::path>(p) : std::nullopt;
  }
  if (const char* dir = std::getenv(kToolDirEnv); dir && *dir) {
    const fs::path p = fs::path(dir) / spec.command;
    if (executable(p)) return p;
  }
  const char* path = std::getenv("PATH");
  if (!path) return std::nullopt;
  for (const std::string& name : {spec.command, "nauty-" + spec.command}) {
    std::string_view rest(path);
    while (true) {
      const auto colon = rest.find(':');
      const std::string_view entry = rest.substr(0, colon);
      const fs::path p = fs::path(entry.empty() ? "." : std::string(entry)) / name;
      if (executable(p)) return p;
      if (colon == std::string_view::npos) break;
      rest.remove_prefix(colon + 1);
    }
  }
  return std::nullopt;
}

fs::path resolve_tool(const ToolSpec& spec) {
  validate(spec);
  if (auto p = find_tool(spec)) return *p;
  throw ToolUnavailable("tool '" + spec.command + "' not found" +
                        (spec.tool_dir.empty() ? std::string(" (set ") + kToolDirEnv + " or PATH)"
                                               : " in " + spec.tool_dir.string()));
}

void exec_stream(const ToolSpec& spec, const LineSink& on_line) { run(spec, nullptr, on_line); }

std::vector<std::string> exec_stream(const ToolSpec& spec) {
  std::vector<std::string> out;
  exec_stream(spec, [&](std::string_view line) { out.emplace_back(line); });
  return out;
}

std::vector<std::string> exec_bidi(const ToolSpec& spec, std::span<const std::string> input) {
  std::string payload;
  for (const auto& line : input) {
    payload += line;
    payload += '\n';
  }
  std::vector<std::string> out;
  run(spec, &payload, [&](std::string_view line) { out.emplace_back(line); });
  return out;
}

}  // namespace gsearch::tools
