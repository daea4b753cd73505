#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <string>

namespace cli {

struct Result {
  int exit_code = -1;
  std::string out;
};

// Runs `binary args` through the shell; stderr is discarded. `input`, when
// given, is fed on stdin from a temporary file.
inline Result run(const std::string& binary, const std::string& args, const std::string* input = nullptr) {
  std::string cmd = "'" + binary + "' " + args + " 2>/dev/null";
  std::string tmp;
  if (input) {
    char name[] = "/tmp/avoidctl_stdin_XXXXXX";
    const int fd = mkstemp(name);
    if (fd >= 0) {
      FILE* f = fdopen(fd, "w");
      std::fwrite(input->data(), 1, input->size(), f);
      std::fclose(f);
      tmp = name;
      cmd += " < '" + tmp + "'";
    }
  }
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (!tmp.empty()) std::remove(tmp.c_str());
  return r;
}

}  // namespace cli
