#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "spinlat/errors.hpp"
#include "spinlat/graph_io.hpp"
#include "spinlat/graph.hpp"
#include "spinlat/sweep.hpp"

namespace spinlat::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kComputation = 3 };

int exit_code_for(ErrorKind kind);

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Graph shorthand: ladder:<N>, enum:<N>[:planar][:3conn], file:<path>[#<name>],
/// or a bare path to a graph file.
std::vector<GraphRecord> resolve_graphs(const std::string& spec, bool long_run);

/// Kept block: half | ring:inner | ring:outer | random:<seed> | list:<v>,<v>,...
VertexSet resolve_block(const std::string& spec, const Graph& g);

/// start:stop:step, a comma-separated list, or a single value.
std::vector<double> parse_grid(const std::string& spec);
std::vector<int> parse_int_list(const std::string& spec);

/// printf("%.12g")
std::string format_double(double x);

std::string sweep_csv(const SweepTable& table);

/// Flat key=value text, one entry per line, in insertion order.
class Manifest {
 public:
  void set(const std::string& key, const std::string& value);
  const std::string* find(const std::string& key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  std::string str() const;
  void write(const std::string& path) const;
  static Manifest parse(const std::string& text);
  static Manifest read(const std::string& path);

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Rebuilds the argument list recorded in a manifest.
std::vector<std::string> replay_args(const Manifest& manifest);

bool budget_override_from_env();

}  // namespace spinlat::cli
