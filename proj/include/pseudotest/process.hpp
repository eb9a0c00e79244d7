// Copyright 2026 The pseudotest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Subprocess execution for the host adapter: fork/exec with a wall-clock
// limit, combined stdout/stderr captured to a file, and a verbatim command
// log.

#ifndef PSEUDOTEST_PROCESS_HPP
#define PSEUDOTEST_PROCESS_HPP

#include <fcntl.h>
#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pseudotest/util.hpp"

extern char** environ;

namespace pseudotest {

struct ProcessSpec {
  std::vector<std::string> argv;
  fs::path cwd;
  std::map<std::string, std::string> env;  // added to / replacing the inherited environment
  std::optional<std::chrono::milliseconds> timeout;
  fs::path output;  // stdout and stderr; /dev/null when empty
};

struct ProcessResult {
  int exit_code = -1;  // -1 when killed by a signal or not started
  int signal = 0;
  bool timed_out = false;
  bool launched = false;
  double wall_ms = 0.0;

  bool ok() const { return launched && !timed_out && exit_code == 0; }
};

inline std::string shell_quote(const std::string& arg) {
  if (!arg.empty() && arg.find_first_not_of("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
                                            "0123456789_-./=:,+@%") == std::string::npos)
    return arg;
  std::string out = "'";
  for (char c : arg) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

inline std::string command_line(const std::vector<std::string>& argv) {
  std::string out;
  for (const auto& a : argv) {
    if (!out.empty()) out += ' ';
    out += shell_quote(a);
  }
  return out;
}

// Appends one line per finished command.
class CommandLog {
 public:
  CommandLog() = default;
  explicit CommandLog(fs::path path) : path_(std::move(path)) {}

  void record(const ProcessSpec& spec, const ProcessResult& result) {
    if (path_.empty()) return;
    std::lock_guard lock(mutex_);
    if (path_.has_parent_path()) fs::create_directories(path_.parent_path());
    std::ofstream out(path_, std::ios::app);
    out << "[" << spec.cwd.string() << "] $ " << command_line(spec.argv) << "\n  -> ";
    if (!result.launched) out << "launch failed";
    else if (result.timed_out) out << "timeout, killed";
    else if (result.signal) out << "signal " << result.signal;
    else out << "exit " << result.exit_code;
    out << "\n";
  }

 private:
  fs::path path_;
  std::mutex mutex_;
};

// Runs the process to completion or until the timeout, after which its whole
// process group is killed.
inline ProcessResult run_process(const ProcessSpec& spec, CommandLog* log = nullptr) {
  ProcessResult result;
  if (spec.argv.empty()) return result;

  // Everything the child needs is prepared before fork.
  std::vector<std::string> env_strings;
  for (char** e = environ; *e; ++e) {
    std::string entry(*e);
    const auto eq = entry.find('=');
    if (eq != std::string::npos && spec.env.count(entry.substr(0, eq))) continue;
    env_strings.push_back(std::move(entry));
  }
  for (const auto& [k, v] : spec.env) env_strings.push_back(k + "=" + v);
  std::vector<char*> envp;
  for (auto& s : env_strings) envp.push_back(s.data());
  envp.push_back(nullptr);
  std::vector<std::string> args = spec.argv;
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  argv.push_back(nullptr);
  const std::string cwd = spec.cwd.string();
  const std::string output = spec.output.empty() ? "/dev/null" : spec.output.string();
  if (!spec.output.empty() && spec.output.has_parent_path())
    fs::create_directories(spec.output.parent_path());

  const auto started = std::chrono::steady_clock::now();
  const pid_t pid = fork();
  if (pid < 0) {
    if (log) log->record(spec, result);
    return result;
  }
  if (pid == 0) {
    setpgid(0, 0);
    if (!cwd.empty() && chdir(cwd.c_str()) != 0) _exit(127);
    const int fd = open(output.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
    if (fd >= 0) {
      dup2(fd, STDOUT_FILENO);
      dup2(fd, STDERR_FILENO);
      close(fd);
    }
    const int null_in = open("/dev/null", O_RDONLY);
    if (null_in >= 0) dup2(null_in, STDIN_FILENO);
    execvpe(argv[0], argv.data(), envp.data());
    _exit(127);
  }
  setpgid(pid, pid);
  result.launched = true;

  int status = 0;
  auto delay = std::chrono::microseconds(200);
  while (true) {
    const pid_t done = waitpid(pid, &status, WNOHANG);
    if (done == pid) break;
    if (done < 0 && errno != EINTR) {
      result.launched = false;
      break;
    }
    if (spec.timeout && std::chrono::steady_clock::now() - started > *spec.timeout) {
      result.timed_out = true;
      kill(-pid, SIGKILL);
      while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
      }
      break;
    }
    std::this_thread::sleep_for(delay);
    delay = std::min(delay * 2, std::chrono::microseconds(20000));
  }
  result.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - started).count();
  if (result.launched && !result.timed_out) {
    if (WIFEXITED(status)) {
      result.exit_code = WEXITSTATUS(status);
    } else if (WIFSIGNALED(status)) {
      result.signal = WTERMSIG(status);
    }
  }
  // Reap anything left in the group, e.g. daemonized grandchildren.
  kill(-pid, SIGKILL);
  if (log) log->record(spec, result);
  return result;
}

}  // namespace pseudotest

#endif  // PSEUDOTEST_PROCESS_HPP
