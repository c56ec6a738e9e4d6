#pragma once

#include <json.hpp>

#include "rdzeta/theorems.hpp"

namespace rdzeta {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kCsvHeader =
    "n,r,d,D,squarefree,h,invariants,case,status,zeta_total,zeta_by_classes,closed_zeta";

// Rationals render as "num/den" strings end to end; never floats.
nlohmann::json record_to_json(const VerificationRecord& rec);
VerificationRecord record_from_json(const nlohmann::json& j);

std::string record_to_csv_row(const VerificationRecord& rec);
VerificationRecord record_from_csv_row(const std::string& line);

std::string human_report(const VerificationRecord& rec);

CaseLabel case_from_string(const std::string& s);
Status status_from_string(const std::string& s);

}  // namespace rdzeta
