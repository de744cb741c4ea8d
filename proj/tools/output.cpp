#include "output.hpp"

#include <ostream>

namespace qrkit {

nlohmann::ordered_json report_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["theorem"] = theorem_name(rep.theorem);
  j["prime_bound"] = rep.prime_bound;
  j["param_bound"] = rep.param_bound;
  j["cases_checked"] = rep.cases_checked;
  j["cases_skipped"] = rep.cases_skipped;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Counterexample& ce : rep.counterexamples) {
    nlohmann::ordered_json c;
    c["p"] = ce.p;
    c["params"] = ce.params;
    c["expected"] = ce.expected;
    c["got"] = ce.got;
    arr.push_back(std::move(c));
  }
  j["counterexamples"] = std::move(arr);
  j["elapsed_ms"] = rep.elapsed_ms;
  return j;
}

std::string csv_header() {
  return "theorem,prime_bound,param_bound,cases_checked,cases_skipped,"
         "counterexamples,elapsed_ms";
}

std::string csv_row(const VerificationReport& rep) {
  return std::string(theorem_name(rep.theorem)) + "," +
         std::to_string(rep.prime_bound) + "," +
         std::to_string(rep.param_bound) + "," +
         std::to_string(rep.cases_checked) + "," +
         std::to_string(rep.cases_skipped) + "," +
         std::to_string(rep.counterexamples.size()) + "," +
         std::to_string(rep.elapsed_ms);
}

void print_human(std::ostream& os, const VerificationReport& rep) {
  os << theorem_name(rep.theorem) << ": checked=" << rep.cases_checked
     << " skipped=" << rep.cases_skipped
     << " counterexamples=" << rep.counterexamples.size() << " ("
     << rep.elapsed_ms << " ms)\n";
  os << "  grid: " << rep.params_description << "\n";
  size_t shown = 0;
  for (const Counterexample& ce : rep.counterexamples) {
    if (++shown > 10) {
      os << "  ... " << rep.counterexamples.size() - 10 << " more\n";
      break;
    }
    os << "  counterexample p=" << ce.p << " " << ce.params
       << " expected=" << ce.expected << " got=" << ce.got << "\n";
  }
}

}  // namespace qrkit
