#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "qrkit/verifier.hpp"

namespace qrkit {

// flat report object; key order is part of the output contract
nlohmann::ordered_json report_json(const VerificationReport& rep);

std::string csv_header();
std::string csv_row(const VerificationReport& rep);

void print_human(std::ostream& os, const VerificationReport& rep);

}  // namespace qrkit
