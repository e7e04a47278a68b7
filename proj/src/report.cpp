#include "drinfeld/report.hpp"

#include "json.hpp"

namespace drinfeld {

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["identity"] = identity;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = p;
  j["precision"] = precision;
  j["pass"] = pass;
  j["witness"] = witness ? nlohmann::ordered_json(*witness) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string joined_params(const std::vector<std::pair<std::string, std::string>>& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ';';
    out += k + "=" + v;
  }
  return out;
}

}  // namespace

std::string csv_header() { return "identity,params,precision,pass,witness"; }

std::string VerificationReport::to_csv() const {
  return csv_field(identity) + "," + csv_field(joined_params(params)) + "," + std::to_string(precision) + "," +
         (pass ? "true" : "false") + "," + csv_field(witness.value_or(""));
}

std::string VerificationReport::to_text() const {
  std::string out = (pass ? "PASS " : "FAIL ") + identity + " [" + joined_params(params) +
                    "] N=" + std::to_string(precision);
  if (witness) out += ": " + *witness;
  return out;
}

}  // namespace drinfeld
