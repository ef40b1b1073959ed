#include "arrform/arrangement_file.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <tuple>

namespace arrform::io {

std::string toString(FileKind k) {
  switch (k) {
    case FileKind::Toric: return "toric";
    case FileKind::Hyperplane: return "hyperplane";
    case FileKind::Strata: return "strata";
  }
  return "unknown";
}

namespace {

std::vector<std::string> tokens(std::string line) {
  if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  std::string spaced;
  for (char c : line) {
    if (c == ':') spaced += " : ";
    else spaced += c;
  }
  std::istringstream in(spaced);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

long parseLong(const std::string& s, int line, const std::string& what) {
  long v = 0;
  const char* first = s.data();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || first == s.data() + s.size())
    throw ParseError(line, "expected an integer " + what + ", got '" + s + "'");
  return v;
}

Rational parseFraction(const std::string& s, int line) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) throw ParseError(line, "expected a fraction p/q, got '" + s + "'");
  const long p = parseLong(s.substr(0, slash), line, "numerator");
  const long q = parseLong(s.substr(slash + 1), line, "denominator");
  if (q == 0) throw ParseError(line, "denominator 0 in '" + s + "'");
  if (q < 0) throw ParseError(line, "negative denominator in '" + s + "'");
  if (std::gcd(p < 0 ? -p : p, q) != 1) throw ParseError(line, "fraction '" + s + "' is not in lowest terms");
  return Rational(p, q);
}

std::string fraction(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Equation parseEquation(const std::vector<std::string>& t, const ArrangementFile& f, int line) {
  const auto colon = std::find(t.begin(), t.end(), ":");
  if (colon == t.end()) throw ParseError(line, "missing ': <p>/<q>' constant");
  const long arity = colon - t.begin() - 1;
  if (arity != f.ambientDim)
    throw ParseError(line, "expected " + std::to_string(f.ambientDim) + " values, got " + std::to_string(arity));
  if (t.end() - colon != 2) throw ParseError(line, "expected exactly one fraction after ':'");
  Equation e;
  for (auto it = t.begin() + 1; it != colon; ++it) e.values.push_back(parseLong(*it, line, "value"));
  if (std::all_of(e.values.begin(), e.values.end(), [](long v) { return v == 0; }))
    throw ParseError(line, f.kind == FileKind::Toric ? "zero exponent row" : "zero normal vector");
  e.constant = parseFraction(t.back(), line);
  const auto lead = std::find_if(e.values.begin(), e.values.end(), [](long v) { return v != 0; });
  if (*lead < 0) {
    for (auto& v : e.values) v = -v;
    e.constant = -e.constant;
  }
  if (f.kind == FileKind::Toric) e.constant = modOne(e.constant);
  return e;
}

StratumLine parseStratum(const std::vector<std::string>& t, int line) {
  const auto colon = std::find(t.begin(), t.end(), ":");
  if (colon == t.end() || colon - t.begin() != 3)
    throw ParseError(line, "expected 'stratum <codim> <dimA> : <dim>@<weight> ...'");
  StratumLine s;
  s.codim = static_cast<int>(parseLong(t[1], line, "codimension"));
  s.localDim = parseLong(t[2], line, "dim A");
  if (s.codim < 0 || s.localDim < 0) throw ParseError(line, "codimension and dim A must be nonnegative");
  for (auto it = colon + 1; it != t.end(); ++it) {
    const auto at = it->find('@');
    if (at == std::string::npos) throw ParseError(line, "expected <dim>@<weight>, got '" + *it + "'");
    s.dims.push_back(parseLong(it->substr(0, at), line, "dimension"));
    s.weights.push_back(static_cast<int>(parseLong(it->substr(at + 1), line, "weight")));
    if (s.dims.back() < 0) throw ParseError(line, "negative dimension");
  }
  if (s.dims.empty()) throw ParseError(line, "a stratum needs at least H^0");
  return s;
}

template <typename T, typename Less>
void canonicalOrder(std::vector<T>& items, std::vector<int>& order, Less less) {
  std::vector<int> perm(items.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return less(items[a], items[b]); });
  std::vector<T> sorted;
  order.clear();
  for (int p : perm) {
    sorted.push_back(items[p]);
    order.push_back(p + 1);
  }
  items = std::move(sorted);
}

}  // namespace

ArrangementFile parseArrangementFile(std::string_view text) {
  ArrangementFile f;
  bool haveHeader = false;
  std::istringstream in{std::string(text)};
  int lineNo = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineNo;
    const auto t = tokens(raw);
    if (t.empty()) continue;
    if (!haveHeader) {
      if (t.size() != 2) throw ParseError(lineNo, "expected '<toric|hyperplane|strata> <n>'");
      if (t[0] == "toric") f.kind = FileKind::Toric;
      else if (t[0] == "hyperplane") f.kind = FileKind::Hyperplane;
      else if (t[0] == "strata") f.kind = FileKind::Strata;
      else throw ParseError(lineNo, "unknown arrangement kind '" + t[0] + "'");
      const long n = parseLong(t[1], lineNo, "dimension");
      if (n < (f.kind == FileKind::Strata ? 0 : 1) || n > 64) throw ParseError(lineNo, "dimension out of range");
      f.ambientDim = static_cast<int>(n);
      haveHeader = true;
      continue;
    }
    if (t[0] == "eq") {
      if (f.kind == FileKind::Strata) throw ParseError(lineNo, "'eq' lines do not belong in a strata file");
      f.equations.push_back(parseEquation(t, f, lineNo));
    } else if (t[0] == "stratum") {
      if (f.kind != FileKind::Strata) throw ParseError(lineNo, "'stratum' lines only belong in a strata file");
      f.strata.push_back(parseStratum(t, lineNo));
    } else {
      throw ParseError(lineNo, "unknown directive '" + t[0] + "'");
    }
  }
  if (!haveHeader) throw ParseError(lineNo, "empty file");

  if (f.kind == FileKind::Strata) {
    canonicalOrder(f.strata, f.inputOrder, [](const StratumLine& a, const StratumLine& b) {
      return std::tie(a.codim, a.localDim, a.dims, a.weights) < std::tie(b.codim, b.localDim, b.dims, b.weights);
    });
    try {
      leray::validate(strataData(f));
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineNo, e.what());
    }
  } else {
    canonicalOrder(f.equations, f.inputOrder, [](const Equation& a, const Equation& b) {
      return std::tie(a.values, a.constant) < std::tie(b.values, b.constant);
    });
  }
  return f;
}

std::string renderArrangementFile(const ArrangementFile& f) {
  std::string out = toString(f.kind) + " " + std::to_string(f.ambientDim) + "\n";
  for (const auto& e : f.equations) {
    out += "eq";
    for (long v : e.values) out += " " + std::to_string(v);
    out += " : " + fraction(e.constant) + "\n";
  }
  for (const auto& s : f.strata) {
    out += "stratum " + std::to_string(s.codim) + " " + std::to_string(s.localDim) + " :";
    for (std::size_t k = 0; k < s.dims.size(); ++k)
      out += " " + std::to_string(s.dims[k]) + "@" + std::to_string(s.weights[k]);
    out += "\n";
  }
  return out;
}

std::string digest(const ArrangementFile& f) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : renderArrangementFile(f)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[i] = hex[h & 0xf];
  return s;
}

std::vector<toric::ToricHypersurface> toricArrangement(const ArrangementFile& f) {
  if (f.kind != FileKind::Toric) throw std::invalid_argument("not a toric file");
  std::vector<toric::ToricHypersurface> out;
  for (std::size_t i = 0; i < f.equations.size(); ++i) {
    toric::ToricHypersurface h;
    h.chi = ZVector(f.ambientDim);
    for (int c = 0; c < f.ambientDim; ++c) h.chi(c) = f.equations[i].values[c];
    h.phase = toric::Phase(f.equations[i].constant);
    h.label = static_cast<int>(i);
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<matroid::AffineHyperplane> hyperplaneArrangement(const ArrangementFile& f) {
  if (f.kind != FileKind::Hyperplane) throw std::invalid_argument("not a hyperplane file");
  std::vector<matroid::AffineHyperplane> out;
  for (std::size_t i = 0; i < f.equations.size(); ++i) {
    matroid::AffineHyperplane h;
    h.normal = QVector(f.ambientDim);
    for (int c = 0; c < f.ambientDim; ++c) h.normal(c) = Rational(f.equations[i].values[c]);
    h.constant = f.equations[i].constant;
    h.label = static_cast<int>(i);
    out.push_back(std::move(h));
  }
  return out;
}

leray::StrataData strataData(const ArrangementFile& f) {
  switch (f.kind) {
    case FileKind::Toric: return leray::strataDataFromToric(toricArrangement(f), f.ambientDim);
    case FileKind::Hyperplane: return leray::strataDataFromHyperplanes(hyperplaneArrangement(f), f.ambientDim);
    case FileKind::Strata: break;
  }
  leray::StrataData sd;
  sd.source = leray::Source::Synthetic;
  sd.ambientDim = f.ambientDim;
  for (std::size_t i = 0; i < f.strata.size(); ++i) {
    const auto& s = f.strata[i];
    sd.strata.push_back({"S" + std::to_string(i + 1), s.codim, s.dims, s.weights, s.localDim});
  }
  return sd;
}

}  // namespace arrform::io
