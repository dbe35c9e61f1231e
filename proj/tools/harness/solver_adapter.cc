// Copyright 2026 The vnfwdm Authors.
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

#include "harness/solver_adapter.h"

#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <fmt/core.h>
#include <nlohmann/json.hpp>

#include "vnfwdm/error.h"

namespace vnfwdm::harness {
namespace {

constexpr double kGraceSeconds = 10.0;

void ReplaceAll(std::string* s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s->find(from, pos)) != std::string::npos; pos += to.size()) {
    s->replace(pos, from.size(), to);
  }
}

std::string ShellQuote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

}  // namespace

SolverAdapterConfig ParseSolverConfig(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, fmt::format("solver config: {}", e.what()));
  }
  if (!j.is_object() || !j.contains("command") || !j["command"].is_string()) {
    throw Error(ErrorKind::kParse, "solver config: 'command' string is required");
  }
  SolverAdapterConfig config;
  config.command = j["command"].get<std::string>();
  if (j.contains("time_limit")) {
    if (!j["time_limit"].is_number() || !(j["time_limit"].get<double>() > 0.0)) {
      throw Error(ErrorKind::kParse, "solver config: 'time_limit' must be a positive number");
    }
    config.time_limit = j["time_limit"].get<double>();
  }
  if (j.contains("format")) {
    const std::string f = j["format"].is_string() ? j["format"].get<std::string>() : "";
    if (f == "lp") {
      config.format = ModelFormat::kLp;
    } else if (f == "mps") {
      config.format = ModelFormat::kMps;
    } else {
      throw Error(ErrorKind::kParse, "solver config: 'format' must be \"lp\" or \"mps\"");
    }
  }
  for (const char* placeholder : {"{model}", "{solution}"}) {
    if (config.command.find(placeholder) == std::string::npos) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("solver config: command lacks the {} placeholder", placeholder));
    }
  }
  return config;
}

SolverAdapterConfig LoadSolverConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, fmt::format("cannot open solver config '{}'", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseSolverConfig(buffer.str());
}

std::optional<SolverAdapterConfig> ResolveSolverConfig(const std::string& explicit_path) {
  if (!explicit_path.empty()) return LoadSolverConfig(explicit_path);
  const char* env = std::getenv(kSolverConfigEnv);
  if (env != nullptr && *env != '\0') return LoadSolverConfig(env);
  return std::nullopt;
}

std::string ExpandCommand(const SolverAdapterConfig& config, const std::string& model_path,
                          const std::string& solution_path, double time_limit) {
  std::string cmd = config.command;
  ReplaceAll(&cmd, "{model}", ShellQuote(model_path));
  ReplaceAll(&cmd, "{solution}", ShellQuote(solution_path));
  ReplaceAll(&cmd, "{time_limit}", fmt::format("{}", time_limit));
  return cmd;
}

SolverRun RunSolver(const SolverAdapterConfig& config, const std::string& model_path,
                    const std::string& solution_path, double time_limit) {
  SolverRun run;
  run.command = ExpandCommand(config, model_path, solution_path, time_limit);
  const auto start = std::chrono::steady_clock::now();
  const pid_t pid = fork();
  if (pid < 0) throw Error(ErrorKind::kSolver, "fork failed");
  if (pid == 0) {
    setpgid(0, 0);
    execl("/bin/sh", "sh", "-c", run.command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  setpgid(pid, pid);
  const double deadline = time_limit + kGraceSeconds;
  int status = 0;
  bool timed_out = false;
  while (true) {
    const pid_t done = waitpid(pid, &status, WNOHANG);
    if (done == pid) break;
    if (done < 0) throw Error(ErrorKind::kSolver, "waitpid failed");
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > deadline) {
      kill(-pid, SIGKILL);
      waitpid(pid, &status, 0);
      timed_out = true;
      break;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  run.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (timed_out) {
    run.status = RunStatus::kTimeout;
  } else if (WIFEXITED(status)) {
    run.exit_code = WEXITSTATUS(status);
    run.status = run.exit_code == 0 ? RunStatus::kFinished : RunStatus::kFailed;
  }
  return run;
}

const char* RunStatusName(RunStatus status) {
  switch (status) {
    case RunStatus::kFinished:
      return "finished";
    case RunStatus::kTimeout:
      return "timeout";
    case RunStatus::kFailed:
      return "failed";
  }
  return "failed";
}

}  // namespace vnfwdm::harness
