#include "rdzeta/report.hpp"

#include <sstream>

namespace rdzeta {
namespace {

std::string rat_or_empty(const std::optional<Rat>& q) { return q ? q->get_str() : std::string(); }

std::optional<Rat> rat_from_str(const std::string& s) {
    if (s.empty()) return std::nullopt;
    Rat q(s);
    q.canonicalize();
    return q;
}

std::string invariants_str(const std::vector<Int>& inv) {
    std::string s;
    for (std::size_t i = 0; i < inv.size(); ++i) {
        if (i) s += "x";
        s += inv[i].get_str();
    }
    return s;
}

std::vector<Int> invariants_from_str(const std::string& s) {
    std::vector<Int> out;
    std::string cur;
    for (char ch : s + "x") {
        if (ch == 'x') {
            if (!cur.empty()) out.emplace_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

}  // namespace

CaseLabel case_from_string(const std::string& s) {
    for (CaseLabel c : {CaseLabel::T1_I, CaseLabel::T1_II, CaseLabel::T2_I, CaseLabel::T2_II,
                        CaseLabel::T2_III, CaseLabel::T3_I, CaseLabel::T3_II, CaseLabel::T4_i,
                        CaseLabel::T4_ii, CaseLabel::T4_iii, CaseLabel::UNCOVERED}) {
        if (to_string(c) == s) return c;
    }
    throw std::domain_error("unknown case label: " + s);
}

Status status_from_string(const std::string& s) {
    for (Status st : {Status::CONFIRMED, Status::VACUOUS, Status::UNCOVERED, Status::VIOLATION,
                      Status::REJECTED}) {
        if (to_string(st) == s) return st;
    }
    throw std::domain_error("unknown status: " + s);
}

nlohmann::json record_to_json(const VerificationRecord& rec) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = rec.n.get_str();
    j["r"] = rec.r;
    j["d"] = rec.d.get_str();
    j["D"] = rec.squarefree ? rec.D.get_str() : "";
    j["squarefree"] = rec.squarefree;
    if (!rec.squarefree) j["reject_reason"] = rec.reject_reason;
    j["h"] = rec.h;
    j["invariants"] = invariants_str(rec.invariant_factors);
    j["case"] = to_string(rec.kase.label);
    j["status"] = to_string(rec.status);
    j["zeta_total"] = rat_or_empty(rec.zeta_total);
    j["zeta_by_classes"] = rat_or_empty(rec.zeta_by_classes);
    j["closed_zeta"] = rat_or_empty(rec.closed_zeta);
    j["notes"] = rec.notes;
    return j;
}

VerificationRecord record_from_json(const nlohmann::json& j) {
    VerificationRecord rec;
    rec.n = Int(j.at("n").get<std::string>());
    rec.r = j.at("r").get<int>();
    rec.d = Int(j.at("d").get<std::string>());
    rec.squarefree = j.at("squarefree").get<bool>();
    std::string D = j.at("D").get<std::string>();
    if (!D.empty()) rec.D = Int(D);
    if (j.contains("reject_reason")) rec.reject_reason = j["reject_reason"].get<std::string>();
    rec.h = j.at("h").get<int>();
    rec.invariant_factors = invariants_from_str(j.at("invariants").get<std::string>());
    rec.kase.label = case_from_string(j.at("case").get<std::string>());
    rec.status = status_from_string(j.at("status").get<std::string>());
    rec.zeta_total = rat_from_str(j.at("zeta_total").get<std::string>());
    rec.zeta_by_classes = rat_from_str(j.at("zeta_by_classes").get<std::string>());
    rec.closed_zeta = rat_from_str(j.at("closed_zeta").get<std::string>());
    if (j.contains("notes")) rec.notes = j["notes"].get<std::vector<std::string>>();
    return rec;
}

std::string record_to_csv_row(const VerificationRecord& rec) {
    std::ostringstream os;
    os << rec.n.get_str() << "," << rec.r << "," << rec.d.get_str() << ","
       << (rec.squarefree ? rec.D.get_str() : "") << "," << (rec.squarefree ? "true" : "false")
       << "," << rec.h << "," << invariants_str(rec.invariant_factors) << ","
       << to_string(rec.kase.label) << "," << to_string(rec.status) << ","
       << rat_or_empty(rec.zeta_total) << "," << rat_or_empty(rec.zeta_by_classes) << ","
       << rat_or_empty(rec.closed_zeta);
    return os.str();
}

VerificationRecord record_from_csv_row(const std::string& line) {
    std::vector<std::string> cols;
    std::string cur;
    for (char ch : line + ",") {
        if (ch == ',') {
            cols.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (cols.size() != 12) throw std::domain_error("csv row must have 12 columns");
    VerificationRecord rec;
    rec.n = Int(cols[0]);
    rec.r = std::stoi(cols[1]);
    rec.d = Int(cols[2]);
    if (!cols[3].empty()) rec.D = Int(cols[3]);
    rec.squarefree = cols[4] == "true";
    rec.h = std::stoi(cols[5]);
    rec.invariant_factors = invariants_from_str(cols[6]);
    rec.kase.label = case_from_string(cols[7]);
    rec.status = status_from_string(cols[8]);
    rec.zeta_total = rat_from_str(cols[9]);
    rec.zeta_by_classes = rat_from_str(cols[10]);
    rec.closed_zeta = rat_from_str(cols[11]);
    return rec;
}

std::string human_report(const VerificationRecord& rec) {
    std::ostringstream os;
    os << "n = " << rec.n.get_str() << ", r = " << rec.r << ", d = " << rec.d.get_str();
    if (!rec.squarefree) {
        os << "\n  rejected: " << rec.reject_reason << "\n";
        return os.str();
    }
    os << ", D = " << rec.D.get_str() << "\n";
    os << "  h = " << rec.h << ", class group invariants = ["
       << invariants_str(rec.invariant_factors) << "]\n";
    os << "  case = " << to_string(rec.kase.label) << ", status = " << to_string(rec.status)
       << "\n";
    if (rec.zeta_total) os << "  zeta(-1)            = " << rec.zeta_total->get_str() << "\n";
    if (rec.zeta_by_classes)
        os << "  zeta(-1) by classes = " << rec.zeta_by_classes->get_str() << "\n";
    if (rec.closed_zeta) os << "  stated formula      = " << rec.closed_zeta->get_str() << "\n";
    for (auto& note : rec.notes) os << "  note: " << note << "\n";
    return os.str();
}

}  // namespace rdzeta
