#include "routh/document.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace routh {

namespace {

std::string sign_symbol(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

std::string power_label(int power) { return "s^" + std::to_string(power); }

const SpecialEvent* event_for_row(const RouthArray& a, int power) {
  for (const auto& e : a.events) {
    if (e.row_power == power) return &e;
  }
  return nullptr;
}

Document event_json(const SpecialEvent& e) {
  Document j;
  j["kind"] = std::string(to_string(e.kind));
  j["row_power"] = e.row_power ? Document(*e.row_power) : Document(nullptr);
  j["remedy"] = e.remedy;
  return j;
}

Document roots_json(const RootSet& r) {
  Document roots = Document::array();
  for (const Complex& z : r.roots) {
    Document root;
    root["re"] = format_real(z.real());
    root["im"] = format_real(z.imag());
    roots.push_back(std::move(root));
  }
  return roots;
}

std::string events_brief(const std::vector<SpecialEvent>& events) {
  if (events.empty()) return "-";
  std::string out;
  for (const auto& e : events) {
    if (!out.empty()) out += ", ";
    out += std::string(to_string(e.kind));
    if (e.row_power) out += "@" + power_label(*e.row_power);
  }
  return out;
}

std::string roots_text(const RootSet& r) {
  std::ostringstream os;
  for (const Complex& z : r.roots) {
    os << "  " << format_real(z.real()) << (z.imag() < 0 ? " - " : " + ")
       << format_real(std::abs(z.imag())) << "i\n";
  }
  return os.str();
}

}  // namespace

std::string format_real(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

Document analysis_document(const StabilityReport& report, Policy policy) {
  Document doc;
  Document input;
  input["degree"] = report.input.degree();
  input["coefficients"] = descending_coefficients(report.input);
  input["polynomial"] = render(report.input);
  doc["input"] = std::move(input);
  doc["policy"] = std::string(to_string(policy));

  Document rows = Document::array();
  for (std::size_t i = 0; i < report.array.rows.size(); ++i) {
    const int power = report.array.power_of(i);
    Document row;
    row["power"] = power;
    Document entries = Document::array();
    for (const EpsRat& x : report.array.rows[i]) entries.push_back(x.to_string());
    row["entries"] = std::move(entries);
    const SpecialEvent* e = event_for_row(report.array, power);
    row["event"] = e ? Document(std::string(to_string(e->kind))) : Document(nullptr);
    rows.push_back(std::move(row));
  }
  doc["array"] = std::move(rows);

  Document events = Document::array();
  for (const auto& e : report.events) events.push_back(event_json(e));
  doc["events"] = std::move(events);

  Document signs = Document::array();
  for (int s : report.first_column_signs) signs.push_back(sign_symbol(s));
  doc["signs"] = std::move(signs);
  doc["sign_changes"] = report.sign_changes;
  doc["rhp_count"] = report.rhp_count;
  doc["verdict"] = std::string(to_string(report.verdict));

  if (report.oracle_check) {
    const OracleSummary& o = *report.oracle_check;
    Document oracle;
    oracle["roots"] = roots_json(o.roots);
    oracle["lhp"] = o.counts.lhp;
    oracle["rhp"] = o.counts.rhp;
    oracle["axis"] = o.counts.axis;
    oracle["converged"] = o.roots.converged;
    oracle["agreement"] = o.agreement;
    doc["oracle"] = std::move(oracle);
  } else {
    doc["oracle"] = nullptr;
  }
  doc["version"] = kVersion;
  return doc;
}

Document comparison_document(const Comparison& cmp) {
  Document doc;
  Document input;
  input["degree"] = cmp.input.degree();
  input["coefficients"] = descending_coefficients(cmp.input);
  input["polynomial"] = render(cmp.input);
  doc["input"] = std::move(input);
  Document policies = Document::array();
  for (const auto& o : cmp.outcomes) {
    Document row;
    row["policy"] = std::string(to_string(o.policy));
    row["verdict"] = std::string(to_string(o.verdict()));
    if (o.report) {
      row["sign_changes"] = o.report->sign_changes;
      row["rhp_count"] = o.report->rhp_count;
      Document events = Document::array();
      for (const auto& e : o.report->events) events.push_back(event_json(e));
      row["events"] = std::move(events);
      row["agreement"] = o.report->rhp_count == cmp.counts.rhp;
      row["error"] = nullptr;
    } else {
      row["sign_changes"] = nullptr;
      row["rhp_count"] = nullptr;
      row["events"] = Document::array();
      row["agreement"] = nullptr;
      row["error"] = o.error;
    }
    policies.push_back(std::move(row));
  }
  doc["policies"] = std::move(policies);
  Document oracle;
  oracle["roots"] = roots_json(cmp.roots);
  oracle["lhp"] = cmp.counts.lhp;
  oracle["rhp"] = cmp.counts.rhp;
  oracle["axis"] = cmp.counts.axis;
  oracle["converged"] = cmp.roots.converged;
  doc["oracle"] = std::move(oracle);
  doc["version"] = kVersion;
  return doc;
}

Document corpus_document(const CorpusSummary& summary) {
  Document doc;
  Document options;
  options["count"] = summary.options.count;
  options["min_degree"] = summary.options.min_degree;
  options["max_degree"] = summary.options.max_degree;
  options["seed"] = summary.options.seed;
  options["stable_only"] = summary.options.stable_only;
  doc["options"] = std::move(options);
  doc["agreed"] = summary.agreements;
  doc["total"] = summary.cases.size();
  doc["cases_with_events"] = summary.cases_with_events;
  Document events;
  for (EventKind k : {EventKind::ZeroFirstElement, EventKind::ZeroRow, EventKind::LeadingSignFlip,
                      EventKind::OriginRootsStripped}) {
    auto it = summary.event_counts.find(k);
    events[std::string(to_string(k))] = it == summary.event_counts.end() ? 0 : it->second;
  }
  doc["events"] = std::move(events);
  Document verdicts;
  for (Verdict v : {Verdict::Stable, Verdict::Unstable, Verdict::MarginalOrSymmetric, Verdict::Undetermined}) {
    auto it = summary.verdicts.find(v);
    verdicts[std::string(to_string(v))] = it == summary.verdicts.end() ? 0 : it->second;
  }
  doc["verdicts"] = std::move(verdicts);
  Document disagreements = Document::array();
  for (const CorpusCase* c : summary.disagreements()) {
    Document d;
    d["index"] = c->index;
    d["polynomial"] = render(c->polynomial);
    Document roots = Document::array();
    for (const Complex& z : c->roots) {
      roots.push_back(Document{{"re", format_real(z.real())}, {"im", format_real(z.imag())}});
    }
    d["constructed_roots"] = std::move(roots);
    d["constructed_rhp"] = c->constructed_rhp;
    d["routh_rhp"] = c->report ? Document(c->report->rhp_count) : Document(nullptr);
    d["oracle_rhp"] = c->report ? Document(c->report->oracle_check->counts.rhp) : Document(nullptr);
    d["error"] = c->error.empty() ? Document(nullptr) : Document(c->error);
    disagreements.push_back(std::move(d));
  }
  doc["disagreements"] = std::move(disagreements);
  doc["version"] = kVersion;
  return doc;
}

Document sweep_document(const SweepResult& result, bool with_samples) {
  Document doc;
  doc["parameter"] = result.parameter;
  doc["range"] = Document{{"lo", result.lo.to_string()}, {"hi", result.hi.to_string()}};
  doc["steps"] = result.steps;
  Document intervals = Document::array();
  for (const auto& [lo, hi] : result.intervals) {
    intervals.push_back(Document{{"lo", lo.to_string()},
                                 {"hi", hi.to_string()},
                                 {"lo_decimal", format_real(lo.to_double())},
                                 {"hi_decimal", format_real(hi.to_double())}});
  }
  doc["intervals"] = std::move(intervals);
  if (with_samples) {
    Document samples = Document::array();
    for (const auto& s : result.samples) {
      samples.push_back(Document{{"value", s.value.to_string()}, {"verdict", std::string(to_string(s.verdict))}});
    }
    doc["samples"] = std::move(samples);
  }
  doc["version"] = kVersion;
  return doc;
}

std::string serialize(const Document& doc) { return doc.dump(2) + "\n"; }

std::string analysis_text(const StabilityReport& report, Policy policy) {
  std::ostringstream os;
  os << "polynomial: " << render(report.input) << "\n";
  os << "policy:     " << to_string(policy) << "\n";
  for (const auto& e : report.events) {
    if (!e.row_power) os << "note:       " << to_string(e.kind) << ": " << e.remedy << "\n";
  }
  os << "\n";

  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (const RouthRow& row : report.array.rows) {
    std::vector<std::string> r;
    for (const EpsRat& x : row) {
      r.push_back(x.to_string());
      width = std::max(width, r.back().size());
    }
    cells.push_back(std::move(r));
  }
  const std::size_t label_width = power_label(report.array.degree).size();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const int power = report.array.power_of(i);
    os << "  " << std::setw(static_cast<int>(label_width)) << std::left << power_label(power) << " |";
    for (const auto& c : cells[i]) os << "  " << std::setw(static_cast<int>(width)) << std::left << c;
    if (const SpecialEvent* e = event_for_row(report.array, power)) {
      os << "  <- " << to_string(e->kind) << ": " << e->remedy;
    }
    std::string line = os.str();
    line.erase(line.find_last_not_of(' ') + 1);
    os.str(line + "\n");
    os.seekp(0, std::ios::end);
  }
  os << std::right << "\nfirst column signs:";
  for (int s : report.first_column_signs) os << ' ' << sign_symbol(s);
  os << "\nsign changes: " << report.sign_changes << "\n";
  os << "rhp roots:    " << report.rhp_count << "\n";
  os << "verdict:      " << to_string(report.verdict) << "\n";
  if (report.oracle_check) {
    const OracleSummary& o = *report.oracle_check;
    os << "\noracle roots" << (o.roots.converged ? "" : " (not converged)") << ":\n" << roots_text(o.roots);
    os << "oracle counts: lhp " << o.counts.lhp << ", rhp " << o.counts.rhp << ", axis " << o.counts.axis
       << "\nagreement:    " << (o.agreement ? "yes" : "NO") << "\n";
  }
  return os.str();
}

std::string comparison_text(const Comparison& cmp) {
  std::ostringstream os;
  os << "polynomial: " << render(cmp.input) << "\n\n";
  os << std::left << std::setw(12) << "policy" << std::setw(14) << "sign_changes" << std::setw(21) << "verdict"
     << std::setw(11) << "agreement" << "events\n";
  for (const auto& o : cmp.outcomes) {
    os << std::setw(12) << std::string(to_string(o.policy));
    if (o.report) {
      os << std::setw(14) << o.report->sign_changes << std::setw(21) << std::string(to_string(o.verdict()))
         << std::setw(11) << (o.report->rhp_count == cmp.counts.rhp ? "yes" : "NO")
         << events_brief(o.report->events) << "\n";
    } else {
      os << std::setw(14) << "-" << std::setw(21) << std::string(to_string(o.verdict())) << std::setw(11) << "-"
         << o.error << "\n";
    }
  }
  os << std::setw(12) << "oracle" << "rhp " << cmp.counts.rhp << ", lhp " << cmp.counts.lhp << ", axis "
     << cmp.counts.axis << (cmp.roots.converged ? "" : " (not converged)") << "\n";
  return os.str();
}

std::string corpus_text(const CorpusSummary& summary) {
  std::ostringstream os;
  const auto& opt = summary.options;
  os << "corpus: " << opt.count << " polynomials, degrees " << opt.min_degree << ".." << opt.max_degree
     << ", seed " << opt.seed << (opt.stable_only ? ", LHP roots only" : "") << "\n";
  os << "agreement: " << summary.agreements << "/" << summary.cases.size() << "\n";
  os << "cases with events: " << summary.cases_with_events << "\n";
  for (const auto& [kind, n] : summary.event_counts) os << "  " << to_string(kind) << ": " << n << "\n";
  os << "verdicts:";
  for (const auto& [v, n] : summary.verdicts) os << " " << to_string(v) << "=" << n;
  os << "\n";
  for (const CorpusCase* c : summary.disagreements()) {
    os << "DISAGREEMENT #" << c->index << ": " << render(c->polynomial) << "\n  constructed roots:";
    for (const Complex& z : c->roots) os << " (" << format_real(z.real()) << "," << format_real(z.imag()) << ")";
    os << "\n  constructed rhp " << c->constructed_rhp;
    if (c->report) {
      os << ", routh rhp " << c->report->rhp_count << ", oracle rhp " << c->report->oracle_check->counts.rhp;
    }
    if (!c->error.empty()) os << ", error: " << c->error;
    os << "\n";
  }
  return os.str();
}

std::string sweep_text(const SweepResult& result, bool with_samples) {
  std::ostringstream os;
  os << "sweep " << result.parameter << " over [" << result.lo << ", " << result.hi << "], " << result.steps
     << " samples\n";
  if (result.intervals.empty()) os << "no stable interval\n";
  for (const auto& [lo, hi] : result.intervals) {
    os << "stable: [" << format_real(lo.to_double()) << ", " << format_real(hi.to_double()) << "]  (" << lo
       << " .. " << hi << ")\n";
  }
  if (with_samples) {
    for (const auto& s : result.samples) os << "  " << s.value << "  " << to_string(s.verdict) << "\n";
  }
  return os.str();
}

}  // namespace routh
