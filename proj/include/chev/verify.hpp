#pragma once

#include "chev/presgen.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chev {

// Values of the additive generators T0 and of the unit generators A.
struct Assignment {
    std::vector<Poly> t0;
    std::vector<Poly> units;
};
Assignment default_assignment(const RingSpec& ring);

Poly symbol_argument(const GenSymbol& s, const Assignment& a);
ModelMatrix eval_word(const Word& w, const GroupModel& model, const Assignment& a);

struct VerifyFailure {
    std::size_t index = 0;
    std::string family;
    std::string item;
    std::string detail;
};

struct VerifyReport {
    std::string check;
    std::size_t total = 0;
    std::size_t passed = 0;
    std::vector<VerifyFailure> failures;
    bool ok() const { return passed == total && failures.empty(); }
};

// Evaluates every relator; ring elements enter through the ring's model, so
// Laurent variables stay indeterminate.
VerifyReport verify_presentation(const Presentation& p, const GroupModel& model, const RingSpec& ring,
                                 std::size_t max_failures = 50);

// Adjacency level of a kernel root, or its height in the Borel case.
int kernel_level(const ParabolicSpec& spec, std::optional<int> borel_n, const Root& g);

// Writes M as a product of kernel-root elements of level >= min_level, peeling
// the lowest level first. Returns the factors, or nullopt when the remainder
// is not the identity.
struct PeeledFactor {
    Root root;
    Poly coeff;
};
std::optional<std::vector<PeeledFactor>> graded_peel(const ModelMatrix& M, const GroupModel& model,
                                                     const ParabolicSpec& spec, std::optional<int> borel_n,
                                                     int min_level = 1);

// (a) conjugates of kernel-root elements by extended-Levi generators lie in
// the kernel, with symbolic arguments; (b) the projection deleting kernel
// letters is multiplicative on seeded random words.
VerifyReport verify_retract(const ParabolicSpec& spec, const GroupModel& model, const RingSpec& ring, int samples,
                            std::uint64_t seed = 1, std::optional<int> borel_n = std::nullopt);

// Commutators of kernel generators at levels j1, j2 land at level >= j1 + j2,
// and conjugating a level-j generator by a kernel generator stays at level >= j.
VerifyReport verify_filtration(const ParabolicSpec& spec, const GroupModel& model, const RingSpec& ring,
                               std::optional<int> borel_n = std::nullopt);

}  // namespace chev
