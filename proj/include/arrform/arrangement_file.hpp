#pragma once

// Line-oriented arrangement files.
//
//   # comment
//   toric 2                 (or: hyperplane <n>, strata <n>)
//   eq 1 -1 : 1/2           one equation: n integers, then a fraction
//   stratum 1 1 : 1@0 1@2   strata files: codim, dim A, then dim@weight per degree
//
// For toric files the fraction is the phase t of z^chi = exp(2 pi i t) and is
// reduced modulo one; for hyperplane files it is the constant c of a.x = c.

#include "arrform/leray.hpp"
#include "arrform/matroid.hpp"
#include "arrform/toric.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arrform::io {

enum class FileKind { Toric, Hyperplane, Strata };

std::string toString(FileKind k);

struct Equation {
  std::vector<long> values;
  Rational constant{0};

  bool operator==(const Equation&) const = default;
};

struct StratumLine {
  int codim = 0;
  long localDim = 1;
  std::vector<long> dims;
  std::vector<int> weights;

  bool operator==(const StratumLine&) const = default;
};

struct ArrangementFile {
  FileKind kind = FileKind::Toric;
  int ambientDim = 0;
  std::vector<Equation> equations;
  std::vector<StratumLine> strata;
  /// After canonicalization: the 1-based input position of each entry.
  std::vector<int> inputOrder;

  bool operator==(const ArrangementFile&) const = default;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(int line, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses and canonicalizes: signs normalized so the first nonzero value is
/// positive (toric phases and hyperplane constants follow), then entries
/// sorted. Throws ParseError.
ArrangementFile parseArrangementFile(std::string_view text);

/// Canonical text of a parsed file; parsing it back gives the same file up
/// to the input order.
std::string renderArrangementFile(const ArrangementFile& f);

/// FNV-1a 64-bit hash of the canonical text, as 16 hex digits.
std::string digest(const ArrangementFile& f);

std::vector<toric::ToricHypersurface> toricArrangement(const ArrangementFile& f);
std::vector<matroid::AffineHyperplane> hyperplaneArrangement(const ArrangementFile& f);
/// Strata data for any kind: computed for toric and hyperplane files,
/// declared for strata files.
leray::StrataData strataData(const ArrangementFile& f);

}  // namespace arrform::io
