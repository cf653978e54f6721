#include "wakimoto/report.hpp"

#include <sstream>

namespace wakimoto {

const char* version() { return WAKIMOTO_VERSION; }

nlohmann::ordered_json params_json(const LieParams& p) {
  nlohmann::ordered_json j;
  j["n"] = p.n();
  j["r"] = p.r();
  j["gamma_sq"] = format_rational(p.gamma_sq());
  auto lam = nlohmann::ordered_json::array();
  for (const auto& x : p.lambda()) lam.push_back(format_rational(x));
  j["lambda"] = lam;
  return j;
}

nlohmann::ordered_json check_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["instances"] = r.instances;
  j["verdict"] = to_string(r.verdict);
  if (r.counterexample) {
    nlohmann::ordered_json c;
    c["modes"] = r.counterexample->modes;
    c["vector"] = r.counterexample->vector.to_string();
    c["delta"] = r.counterexample->delta.to_string();
    j["counterexample"] = c;
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (!r.measured.empty()) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& m : r.measured) {
      nlohmann::ordered_json e;
      e["instance"] = m.instance;
      e["printed"] = m.printed;
      e["measured"] = m.measured;
      arr.push_back(e);
    }
    j["measured"] = arr;
  }
  return j;
}

nlohmann::ordered_json document_json(const RunDocument& doc) {
  nlohmann::ordered_json j;
  j["params"] = params_json(doc.params);
  j["suite"] = doc.suite;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : doc.checks) checks.push_back(check_json(c));
  j["checks"] = checks;
  j["warnings"] = doc.warnings;
  j["version"] = version();
  return j;
}

std::string render_json(const std::vector<RunDocument>& docs, bool grid) {
  if (!grid && docs.size() == 1) return document_json(docs.front()).dump(2) + "\n";
  nlohmann::ordered_json j;
  auto runs = nlohmann::ordered_json::array();
  for (const auto& d : docs) runs.push_back(document_json(d));
  j["runs"] = runs;
  j["version"] = version();
  return j.dump(2) + "\n";
}

std::string render_text(const std::vector<RunDocument>& docs) {
  std::ostringstream os;
  for (const auto& doc : docs) {
    const auto& p = doc.params;
    os << "params n=" << p.n() << " r=" << p.r() << " gamma_sq=" << format_rational(p.gamma_sq())
       << " lambda=[";
    for (std::size_t k = 0; k < p.lambda().size(); ++k)
      os << (k ? "," : "") << format_rational(p.lambda()[k]);
    os << "]\nsuite " << doc.suite << "\n";
    for (const auto& c : doc.checks) {
      os << "  " << c.id << " " << to_string(c.verdict) << " instances=" << c.instances
         << (c.authoritative ? "" : " (diagnostic)") << "\n";
      if (c.counterexample) {
        os << "    counterexample modes=[";
        for (std::size_t k = 0; k < c.counterexample->modes.size(); ++k)
          os << (k ? "," : "") << c.counterexample->modes[k];
        os << "] vector=" << c.counterexample->vector.to_string()
           << " delta=" << c.counterexample->delta.to_string() << "\n";
      }
      for (const auto& n : c.notes) os << "    note: " << n << "\n";
      for (const auto& m : c.measured)
        os << "    measured " << m.instance << ": printed " << m.printed << ", measured "
           << m.measured << "\n";
    }
    for (const auto& w : doc.warnings) os << "  warning: " << w << "\n";
  }
  os << "version " << version() << "\n";
  return os.str();
}

}  // namespace wakimoto
