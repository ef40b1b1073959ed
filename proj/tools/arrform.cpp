// arrform: weight-graded cohomology models of arrangement complements.
//
//   arrform <command> [file] [--r N|inf] [--dot PATH] [--format text|kv]
//
// Exit status: 0 on success, 2 when the computation is refused on
// mathematical grounds, 1 on malformed input or usage errors.

#include "arrform/arrangement_file.hpp"
#include "arrform/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight-graded cohomology models and formality certificates for arrangement complements"};
  std::string command, path, rText = "inf", dotPath, format = "text";
  std::string commands;
  for (const auto& c : arrform::io::kCommands) commands += (commands.empty() ? "" : "|") + c;
  app.add_option("command", command, commands)->required();
  app.add_option("file", path, "arrangement file (optional for model-selftest)");
  app.add_option("--r", rText, "formality index: a nonnegative integer or inf");
  app.add_option("--dot", dotPath, "write the poset in DOT format to PATH ('-' for standard output)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "kv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  if (std::find(arrform::io::kCommands.begin(), arrform::io::kCommands.end(), command) ==
      arrform::io::kCommands.end()) {
    std::cerr << "error: unknown command '" << command << "'\n" << app.help();
    return 1;
  }

  arrform::io::Options options;
  options.format = format == "kv" ? arrform::io::Format::KeyValue : arrform::io::Format::Text;
  options.wantDot = !dotPath.empty();
  const auto r = arrform::FormalityIndex::parse(rText);
  if (!r) {
    std::cerr << "error: --r expects a nonnegative integer or inf, got '" << rText << "'\n";
    return 1;
  }
  options.r = *r;

  try {
    std::optional<arrform::io::ArrangementFile> file;
    if (!path.empty()) file = arrform::io::parseArrangementFile(readFile(path));
    auto report = arrform::io::runCommand(command, file ? &*file : nullptr, options);
    if (options.wantDot && command != "poset") report.warnings.push_back("--dot only applies to poset");
    std::cout << arrform::io::render(report, options.format);
    if (!report.dot.empty()) {
      if (dotPath == "-") {
        std::cout << report.dot;
      } else {
        std::ofstream out(dotPath, std::ios::binary);
        if (!out || !(out << report.dot)) {
          std::cerr << "error: cannot write " << dotPath << "\n";
          return 1;
        }
      }
    }
    return report.exitCode;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
