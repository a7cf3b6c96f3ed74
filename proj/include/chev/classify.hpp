#pragma once

#include "chev/parab.hpp"
#include "chev/ringspec.hpp"

#include <string>
#include <utility>
#include <vector>

namespace chev {

enum class Verdict { finitely_presented, not_finitely_presented, equivalent_to_LE, unknown };
std::string to_string(Verdict v);

struct Reason {
    std::string rule;
    std::string citation;
    std::string line;
};

struct FPStatus {
    Verdict verdict = Verdict::unknown;
    std::vector<Reason> reasons;
};

// Ring-level rule: the parabolic is finitely presented iff its extended Levi
// factor is, for QG rings outside the G2 long-root case. le_status is the
// caller's knowledge about the extended Levi factor. Throws Refusal when
// parabolic subgroups are not known to be finitely generated.
FPStatus ring_rule(const ParabolicSpec& spec, const RingSpec& ring, Tri le_status);

// S-arithmetic rule for split groups over a global field.
FPStatus arithmetic_rule(const ParabolicSpec& spec, const Arithmetic& arith, const std::vector<int>& levi_ranks,
                   bool nvb_holds);
std::vector<int> levi_ranks(const ParabolicSpec& spec);

// What the ring's flags and stored facts say about the extended Levi factor.
Tri infer_le_status(const ParabolicSpec& spec, const RingSpec& ring);
std::string levi_fact_key(const ParabolicSpec& spec);

// The two block layouts (1,5,1,5) and (5,1,1,5) of GL12 / E12 over the ring.
std::pair<FPStatus, FPStatus> gl12_block_example(const RingSpec& ring);

}  // namespace chev
