#pragma once

#include "chev/rootsys.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace chev {

struct ParabolicSpec {
    std::shared_ptr<const RootSystem> rs;
    // Bourbaki indices (0-based) of the simple roots in I, sorted.
    std::vector<int> I;

    ParabolicSpec(std::shared_ptr<const RootSystem> r, std::vector<int> idx);
    bool is_borel() const { return I.empty(); }
    bool is_whole() const { return static_cast<int>(I.size()) == rs->rank(); }
    std::vector<Root> I_roots() const;
};

struct ParabolicProfile {
    std::vector<Root> adj;
    std::vector<Root> nonadj;
    std::vector<Root> ext;
    std::vector<std::vector<Root>> levi_components;
    std::vector<Root> levi_roots;
    // For I = empty this is the extended Levi of borel_n (torus plus X_{alpha_n}).
    std::vector<Root> le_roots;
    std::vector<Root> kernel_roots;
    std::vector<Root> unipotent_roots;
    std::optional<int> borel_n;
};

// Simple roots joined by an edge of the Dynkin diagram.
bool adjacent(const RootSystem& rs, int i, int j);

// For I = empty, borel_n selects which extended Levi factor to describe.
ParabolicProfile profile(const ParabolicSpec& spec, std::optional<int> borel_n = std::nullopt);
std::pair<Root, Root> adj_decompose(const ParabolicSpec& spec, const Root& a);
int alvl(const ParabolicSpec& spec, const Root& g);
bool retracts_onto_almost_borel(const ParabolicSpec& spec);
ParabolicSpec blocks_to_I(int n, const std::vector<int>& blocks);

}  // namespace chev
