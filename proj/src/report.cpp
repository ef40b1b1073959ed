#include "arrform/report.hpp"

#include "arrform/crosscheck.hpp"
#include "arrform/errors.hpp"
#include "arrform/leray.hpp"

#include <algorithm>
#include <sstream>
#include <type_traits>

namespace arrform::io {

const std::vector<std::string> kCommands{"strata", "poset", "e2", "betti", "purity", "certificate", "model-selftest"};

namespace {

template <typename T>
std::string list(const std::vector<T>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    if constexpr (std::is_same_v<T, std::string>) s += v[i];
    else s += std::to_string(v[i]);
  }
  return s + "]";
}

std::string cohomologyString(const std::vector<long>& dims, const std::vector<int>& weights) {
  std::string s;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k) s += " ";
    s += std::to_string(dims[k]) + "@" + std::to_string(weights[k]);
  }
  return s;
}

std::string weightString(const leray::E2Entry& e) {
  if (e.weights.size() == 1) return std::to_string(*e.weights.begin());
  std::string s = "mixed{";
  bool first = true;
  for (int w : e.weights) {
    s += (first ? "" : ",") + std::to_string(w);
    first = false;
  }
  return s + "}";
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

class Builder {
 public:
  explicit Builder(RunReport& r) : r_(r) {}
  void field(const std::string& key, const std::string& value) { r_.fields.emplace_back(key, value); }
  void line(const std::string& text) { r_.text.push_back(text); }

 private:
  RunReport& r_;
};

void addTable(Builder& b, const leray::LerayTable& t, const std::string& prefix) {
  b.field(prefix + "entries", std::to_string(t.entries.size()));
  b.line(pad("p", 4) + pad("q", 4) + pad("dim", 8) + "weight");
  int i = 0;
  for (const auto& [pq, e] : t.entries) {
    const std::string k = prefix + "entry[" + std::to_string(i++) + "]";
    b.field(k + ".p", std::to_string(pq.first));
    b.field(k + ".q", std::to_string(pq.second));
    b.field(k + ".dim", std::to_string(e.dim));
    b.field(k + ".weight", weightString(e));
    b.line(pad(std::to_string(pq.first), 4) + pad(std::to_string(pq.second), 4) + pad(std::to_string(e.dim), 8) +
           weightString(e));
  }
}

void addPurity(Builder& b, const leray::PurityReport& p) {
  b.field("purity.r", p.r.str());
  b.field("purity.passed", p.passed ? "true" : "false");
  b.field("purity.checked", std::to_string(p.verdicts.size()));
  long constrained = 0;
  for (const auto& v : p.verdicts) constrained += v.constrained;
  b.field("purity.constrained", std::to_string(constrained));
  b.line("purity hypothesis for r = " + p.r.str() + ": " + (p.passed ? "passed" : "failed") + " (" +
         std::to_string(constrained) + " of " + std::to_string(p.verdicts.size()) + " nonzero H^k(S) constrained)");
  std::vector<std::string> witnesses;
  for (std::size_t i = 0; i < p.failures.size(); ++i) {
    const auto& f = p.failures[i];
    const std::string w = "stratum " + f.stratum + " codim " + std::to_string(f.codim) + ": H^" +
                          std::to_string(f.degree) + " has weight " + std::to_string(f.declaredWeight) +
                          ", expected " + std::to_string(2 * f.degree);
    witnesses.push_back(w);
    b.line("  witness: " + w);
  }
  b.field("purity.witnesses", std::to_string(witnesses.size()));
  for (std::size_t i = 0; i < witnesses.size(); ++i) b.field("purity.witness[" + std::to_string(i) + "]", witnesses[i]);
}

void runStrata(const ArrangementFile& f, Builder& b) {
  const auto sd = strataData(f);
  b.field("strata.count", std::to_string(sd.strata.size()));
  b.line(std::to_string(sd.strata.size()) + " strata (" + leray::toString(sd.source) + ")");
  b.line(pad("codim", 7) + pad("dimA", 6) + pad("H(S) dim@weight", 18) + "key");
  for (std::size_t i = 0; i < sd.strata.size(); ++i) {
    const auto& s = sd.strata[i];
    const std::string k = "stratum[" + std::to_string(i) + "]";
    b.field(k + ".key", s.key);
    b.field(k + ".codim", std::to_string(s.codim));
    if (sd.source != leray::Source::Synthetic) b.field(k + ".dim", std::to_string(sd.ambientDim - s.codim));
    b.field(k + ".cohomology", cohomologyString(s.dims, s.weights));
    b.field(k + ".dimA", std::to_string(s.localDim));
    b.line(pad(std::to_string(s.codim), 7) + pad(std::to_string(s.localDim), 6) +
           pad(cohomologyString(s.dims, s.weights), 18) + s.key);
  }
}

void runPoset(const ArrangementFile& f, const Options& o, Builder& b, RunReport& r) {
  PosetView view;
  if (f.kind == FileKind::Toric) view = posetView(toric::buildLayerPoset(toricArrangement(f), f.ambientDim));
  else if (f.kind == FileKind::Hyperplane)
    view = posetView(matroid::affineIntersectionPoset(hyperplaneArrangement(f), f.ambientDim));
  else throw std::invalid_argument("poset needs a toric or hyperplane file");
  b.field("poset.nodes", std::to_string(view.nodes.size()));
  b.field("poset.covers", std::to_string(view.covers.size()));
  b.line(std::to_string(view.nodes.size()) + " strata, " + std::to_string(view.covers.size()) + " covering relations");
  for (std::size_t i = 0; i < view.nodes.size(); ++i) {
    const auto& n = view.nodes[i];
    const std::string label = std::to_string(n.codim) + "/" + std::to_string(n.dim) + "/" + n.key;
    b.field("node[" + std::to_string(i) + "]", label);
    b.line("  " + std::to_string(i) + ": " + label);
  }
  for (std::size_t i = 0; i < view.covers.size(); ++i) {
    const auto [hi, lo] = view.covers[i];
    b.field("cover[" + std::to_string(i) + "]", std::to_string(hi) + ">" + std::to_string(lo));
    b.line("  " + std::to_string(hi) + " > " + std::to_string(lo));
  }
  if (o.wantDot) r.dot = renderPosetDot(view);
}

void runBetti(const ArrangementFile& f, Builder& b, RunReport& r) {
  const auto table = leray::assembleE2(strataData(f));
  try {
    const auto betti = leray::bettiAndPoincare(table);
    b.field("betti", list(betti.betti));
    b.field("weights", list(betti.weights));
    b.field("poincare", betti.poincare);
    b.field("hodge", betti.typeNote);
    std::string nums;
    for (std::size_t k = 0; k < betti.betti.size(); ++k) nums += (k ? " " : "") + std::to_string(betti.betti[k]);
    b.line(nums);
    b.line("poincare: " + betti.poincare);
    b.line("weights: " + list(betti.weights));
  } catch (const Refusal& e) {
    r.exitCode = 2;
    b.field("refused", e.what());
    for (std::size_t i = 0; i < e.witnesses().size(); ++i)
      b.field("witness[" + std::to_string(i) + "]", e.witnesses()[i]);
    b.line("refused: " + std::string(e.what()));
    for (const auto& w : e.witnesses()) b.line("  witness: " + w);
  }
}

void runCertificate(const ArrangementFile& f, const Options& o, Builder& b, RunReport& r) {
  const auto sd = strataData(f);
  const auto outcome = leray::formalityCertificate(sd, o.r);
  addPurity(b, outcome.report);
  if (!outcome.certificate) {
    r.exitCode = 2;
    b.field("certificate", "refused");
    b.line("certificate: refused");
    return;
  }
  const auto& c = *outcome.certificate;
  b.field("certificate", "issued");
  b.field("certificate.r", c.r.str());
  b.field("certificate.source", leray::toString(c.source));
  b.field("certificate.degeneration",
          c.degeneration.verdict == leray::DegenerationVerdict::Degenerate ? "E_inf = E_2" : "unknown");
  b.line("certificate: issued for r = " + c.r.str() + " (" + leray::toString(c.source) + ")");
  b.line("degeneration: " + c.degeneration.reason);
  addTable(b, c.table, "model.");
  for (std::size_t i = 0; i < c.reasoning.size(); ++i) {
    b.field("reasoning[" + std::to_string(i) + "]", c.reasoning[i]);
    b.line("  " + std::to_string(i + 1) + ". " + c.reasoning[i]);
  }
}

void runSelfTest(const ArrangementFile* f, Builder& b, RunReport& r) {
  std::vector<crosscheck::SelfTestLine> lines;
  if (f && f->kind == FileKind::Toric) {
    lines = crosscheck::modelSelfTest(toricArrangement(*f), f->ambientDim);
  } else {
    if (f) r.warnings.push_back("only toric files join the cross-engine checks; input ignored");
    lines = crosscheck::modelSelfTest();
  }
  long passed = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& l = lines[i];
    passed += l.passed;
    const std::string k = "check[" + std::to_string(i) + "]";
    b.field(k + ".name", l.name);
    b.field(k + ".passed", l.passed ? "true" : "false");
    b.field(k + ".detail", l.detail);
    b.line(std::string(l.passed ? "PASS " : "FAIL ") + l.name + " -- " + l.detail);
  }
  b.field("checks", std::to_string(lines.size()));
  b.field("passed", std::to_string(passed));
  b.line(std::to_string(passed) + "/" + std::to_string(lines.size()) + " checks passed");
  if (passed != static_cast<long>(lines.size())) r.exitCode = 2;
}

}  // namespace

PosetView posetView(const toric::LayerPoset& p) {
  PosetView v;
  for (const auto& l : p.layers) v.nodes.push_back({l.codim(), l.dim(), l.key()});
  v.covers = p.covers;
  return v;
}

PosetView posetView(const matroid::AffinePoset& p) {
  PosetView v;
  for (const auto& f : p.flats) v.nodes.push_back({f.codim(), f.dim, f.key});
  v.covers = p.covers;
  return v;
}

std::string renderPosetDot(const PosetView& p) {
  std::string out = "digraph strata {\n  rankdir=TB;\n";
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const auto& n = p.nodes[i];
    out += "  n" + std::to_string(i) + " [label=\"" + std::to_string(n.codim) + "/" + std::to_string(n.dim) + "/" +
           n.key + "\"];\n";
  }
  for (const auto& [hi, lo] : p.covers) out += "  n" + std::to_string(hi) + " -> n" + std::to_string(lo) + ";\n";
  return out + "}\n";
}

RunReport runCommand(const std::string& command, const ArrangementFile* file, const Options& options) {
  RunReport r;
  r.command = command;
  if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end())
    throw std::invalid_argument("unknown command '" + command + "'");
  if (!file && command != "model-selftest") throw std::invalid_argument(command + " needs an input file");
  if (file) {
    r.input = toString(file->kind) + " n=" + std::to_string(file->ambientDim) + " entries=" +
              std::to_string(file->kind == FileKind::Strata ? file->strata.size() : file->equations.size());
    r.digest = digest(*file);
    r.inputOrder = file->inputOrder;
  }
  Builder b(r);
  if (command == "strata") runStrata(*file, b);
  else if (command == "poset") runPoset(*file, options, b, r);
  else if (command == "e2") {
    const auto table = leray::assembleE2(strataData(*file));
    addTable(b, table, "e2.");
    b.field("e2.note", table.filtrationNote);
    b.line(table.filtrationNote);
  } else if (command == "betti") runBetti(*file, b, r);
  else if (command == "purity") {
    const auto p = leray::purityHypothesisCheck(strataData(*file), options.r);
    addPurity(b, p);
    if (!p.passed) r.exitCode = 2;
  } else if (command == "certificate") runCertificate(*file, options, b, r);
  else runSelfTest(file, b, r);
  return r;
}

std::string renderStructured(const RunReport& r) {
  std::ostringstream out;
  out << "command = " << r.command << "\n";
  if (!r.input.empty()) {
    out << "input = " << r.input << "\n";
    out << "input.digest = " << r.digest << "\n";
    out << "input.order = " << list(r.inputOrder) << "\n";
  }
  for (const auto& [k, v] : r.fields) out << k << " = " << v << "\n";
  out << "warnings = " << list(r.warnings) << "\n";
  out << "exit = " << r.exitCode << "\n";
  return out.str();
}

std::string renderText(const RunReport& r) {
  std::ostringstream out;
  out << "arrform " << r.command << "\n";
  if (!r.input.empty()) {
    out << "input: " << r.input << ", digest " << r.digest << "\n";
    out << "input order of canonical entries: " << list(r.inputOrder) << "\n";
  }
  for (const auto& line : r.text) out << line << "\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string render(const RunReport& r, Format f) {
  return f == Format::KeyValue ? renderStructured(r) : renderText(r);
}

}  // namespace arrform::io
