#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace drinfeld {

// Outcome of one exact identity check.
struct VerificationReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;  // kept in insertion order
  std::size_t precision = 0;
  bool pass = false;
  std::optional<std::string> witness;  // first discrepancy when the check fails

  // One-line JSON object {identity, params, precision, pass, witness}.
  std::string to_json() const;
  // identity,params,precision,pass,witness with params joined as k=v;k=v.
  std::string to_csv() const;
  std::string to_text() const;
};

std::string csv_header();

}  // namespace drinfeld
