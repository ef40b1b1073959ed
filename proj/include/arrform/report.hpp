#pragma once

// Command dispatch and rendering for the command-line tool. Everything here
// is pure: runCommand returns the full report, including any DOT text, and
// the caller decides where it goes.

#include "arrform/arrangement_file.hpp"
#include "arrform/formality_index.hpp"
#include "arrform/matroid.hpp"
#include "arrform/toric.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arrform::io {

struct PosetView {
  struct Node {
    int codim = 0;
    int dim = 0;
    std::string key;
  };
  std::vector<Node> nodes;
  std::vector<std::pair<int, int>> covers;  // (larger, smaller)
};

PosetView posetView(const toric::LayerPoset& p);
PosetView posetView(const matroid::AffinePoset& p);

/// One node per stratum labeled codim/dim/key, one edge per cover, larger
/// stratum first.
std::string renderPosetDot(const PosetView& p);

enum class Format { Text, KeyValue };

struct Options {
  FormalityIndex r = FormalityIndex::infinite();
  bool wantDot = false;
  Format format = Format::Text;
};

struct RunReport {
  std::string command;
  std::string input;  // "toric n=2 entries=3", empty without a file
  std::string digest;
  std::vector<int> inputOrder;
  std::vector<std::pair<std::string, std::string>> fields;  // in output order
  std::vector<std::string> text;                             // human-readable body
  std::vector<std::string> warnings;
  std::string dot;
  int exitCode = 0;  // 0 done, 2 mathematically refused
};

extern const std::vector<std::string> kCommands;

/// Throws std::invalid_argument for an unknown command or a file of the
/// wrong kind. `file` may be null only for model-selftest.
RunReport runCommand(const std::string& command, const ArrangementFile* file, const Options& options);

/// key = value lines, keys in a fixed order per command.
std::string renderStructured(const RunReport& r);
std::string renderText(const RunReport& r);
std::string render(const RunReport& r, Format f);

}  // namespace arrform::io
