#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace chev {

struct RootSystemType {
    char family = 'A';
    int rank = 1;

    std::string name() const { return std::string(1, family) + std::to_string(rank); }
    bool valid() const;
    bool simply_laced() const { return family == 'A' || family == 'D' || family == 'E'; }
    // Parses "A2", "G2", "A11".
    static RootSystemType parse(const std::string& s);
    bool operator==(const RootSystemType&) const = default;
};

// Coordinates over the simple roots.
struct Root {
    std::vector<int> c;

    int height() const;
    bool positive() const;
    bool negative() const;
    Root operator-() const;
    Root operator+(const Root& o) const;
    Root operator-(const Root& o) const;
    Root scaled(int k) const;
    bool operator==(const Root&) const = default;
    auto operator<=>(const Root&) const = default;
    std::string str() const;
};

class RootSystem {
public:
    static RootSystem build(const RootSystemType& t);

    const RootSystemType& type() const { return type_; }
    int rank() const { return type_.rank; }
    const std::vector<Root>& simples() const { return simples_; }
    // All roots in the fixed order: height ascending, then Delta-order.
    const std::vector<Root>& roots() const { return roots_; }
    std::vector<Root> positive_roots() const;
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    bool contains(const Root& r) const { return index_.count(r.c) != 0; }
    // Position in roots(); throws for non-roots.
    int index(const Root& r) const;
    // Position in roots() or -1.
    int find(const Root& r) const;
    const Root& simple(int i) const { return simples_.at(static_cast<std::size_t>(i)); }
    // Bourbaki index (0-based) of a simple root or -1.
    int simple_index(const Root& r) const;

    int inner(const Root& a, const Root& b) const;
    int norm2(const Root& a) const { return inner(a, a); }
    bool is_long(const Root& a) const;
    int cartan_int(const Root& a, const Root& b) const;
    // Strict total order on roots, height-compatible.
    bool precedes(const Root& a, const Root& b) const;

    std::vector<Root> subsystem(const std::vector<Root>& X) const;
    std::pair<Root, Root> decompose_positive(const Root& g) const;
    Root reflect(const Root& a, const Root& b) const;
    std::pair<std::vector<Root>, Root> weyl_route_to_simple(const Root& g) const;
    // Coroot of a in simple-coroot coordinates.
    std::vector<int> coroot_coords(const Root& a) const;

private:
    RootSystemType type_;
    std::vector<std::vector<int>> gram_;
    std::vector<std::vector<int>> cartan_;
    std::vector<Root> simples_;
    std::vector<Root> roots_;
    std::map<std::vector<int>, int> index_;
};

}  // namespace chev
