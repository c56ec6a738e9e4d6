#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rdzeta/factor.hpp"
#include "rdzeta/zeta.hpp"

namespace rdzeta {

enum class CaseLabel { T1_I, T1_II, T2_I, T2_II, T2_III, T3_I, T3_II, T4_i, T4_ii, T4_iii, UNCOVERED };
enum class PredictedGroup { Z4, Z2xZ2, NONE };

std::string to_string(CaseLabel c);
std::string to_string(PredictedGroup g);

struct ClassificationCase {
    CaseLabel label = CaseLabel::UNCOVERED;
    PredictedGroup predicted_group = PredictedGroup::NONE;
    std::vector<Int> odd_primes;      // matched p (, q (, l)) in increasing order
    std::vector<int> odd_exponents;   // matching exponents
    int two_exponent = 0;             // m in n = 2^m * odd
    bool has_zeta_formula = false;
    // Statement says t >= 2 where the proof argues t >= 3; flagged, not hidden.
    bool exponent_bound_ambiguous = false;
};

// Pure pattern match on factorize(n) and d mod 8.
ClassificationCase classify(const Int& n, int r);

// The theorem's stated total-zeta expression, when the matched case has one.
std::optional<Rat> predicted_zeta_formula(const ClassificationCase& c, const FieldDescriptor& k);

enum class Status { CONFIRMED, VACUOUS, UNCOVERED, VIOLATION, REJECTED };
std::string to_string(Status s);

struct VerificationRecord {
    Int n;
    int r = 1;
    Int d, D;
    bool squarefree = false;
    std::string reject_reason;  // set when !squarefree
    int h = 0;
    std::vector<Int> invariant_factors;
    ClassificationCase kase;
    std::optional<Rat> zeta_total;
    std::optional<Rat> zeta_by_classes;
    std::optional<Rat> closed_zeta;
    Status status = Status::REJECTED;
    std::vector<std::string> notes;
};

VerificationRecord verify_instance(const Int& n, int r);

struct PropositionViolation {
    Int n, d, h_found, h_required;
};

// Lower bound h >= N+2 (d = 1,2 mod 8) or N+1 (d = 5 mod 8) when n has
// at least 3 distinct odd prime factors. Empty optional when the bound
// holds or the hypothesis does not apply.
std::optional<PropositionViolation> proposition_check(const Int& n);

struct ScanSummary {
    std::vector<VerificationRecord> records;
    int confirmed = 0, vacuous = 0, uncovered = 0, violations = 0, rejected = 0;
    // Corollary trend: extreme class numbers per odd-prime-count of n.
    std::vector<std::pair<int, std::pair<int, int>>> h_by_odd_primes;  // N -> (min h, max h)
};

// Deterministic scan over n in [n_min, n_max]; jobs > 1 distributes the
// per-n work across threads, output order is by n regardless.
ScanSummary scan(const Int& n_min, const Int& n_max, int r, int jobs = 1,
                 const std::function<void(const VerificationRecord&)>& progress = {});

}  // namespace rdzeta
