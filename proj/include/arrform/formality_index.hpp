#pragma once

#include <optional>
#include <string>

namespace arrform {

/// The r in "r-formal": a nonnegative integer or infinity.
class FormalityIndex {
 public:
  static FormalityIndex infinite() { return FormalityIndex(); }
  explicit FormalityIndex(int r) : finite_(r) {}

  bool isInfinite() const { return !finite_; }
  int value() const { return *finite_; }
  /// k <= r
  bool covers(int k) const { return !finite_ || k <= *finite_; }
  std::string str() const { return finite_ ? std::to_string(*finite_) : "inf"; }

  /// "inf" / "infinity" or a nonnegative integer; nothing otherwise.
  static std::optional<FormalityIndex> parse(const std::string& text);

  bool operator==(const FormalityIndex&) const = default;

 private:
  FormalityIndex() = default;
  std::optional<int> finite_;
};

inline std::optional<FormalityIndex> FormalityIndex::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinite();
  if (text.empty() || text.size() > 6) return std::nullopt;
  for (char c : text)
    if (c < '0' || c > '9') return std::nullopt;
  return FormalityIndex(std::stoi(text));
}

}  // namespace arrform
