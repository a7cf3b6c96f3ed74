#pragma once

#include "chev/poly.hpp"
#include "chev/rootsys.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace chev {

enum class Tri { yes, no, unknown };
std::string to_string(Tri t);
Tri parse_tri(const std::string& s);

// Exponents over the unit generators A; torsion coordinates in [0, order).
struct UnitElement {
    std::vector<int> e;
    bool operator==(const UnitElement&) const = default;
    auto operator<=>(const UnitElement&) const = default;
};

struct UnitGenerator {
    std::string name;
    int order = 0;  // 0 for a free generator
    Poly value;     // image in the model ring
};

struct AdditiveGenerator {
    std::string name;
    Poly value;
};

// a * unit * x_index
struct UnitTerm {
    std::int64_t a = 1;
    UnitElement unit;
    int x = 0;
};

// One entry of the fixed product expression p(x_i^m, x_j^n).
struct ProductKey {
    int i, j, m, n;
    auto operator<=>(const ProductKey&) const = default;
};

struct Arithmetic {
    std::int64_t global_char = 0;
    int S_size = 1;
};

struct RingSpec {
    std::string name;
    std::int64_t characteristic = 0;
    std::vector<UnitGenerator> units;
    std::vector<AdditiveGenerator> t0;
    // For char 0: primes known to be units. For char p every prime other
    // than p is a unit.
    std::set<std::int64_t> invertible_primes;
    Tri parabolics_fg = Tri::unknown;
    Tri borel2_fp = Tri::unknown;
    std::optional<Arithmetic> arithmetic;
    // Spanning set of the kernel of Z[R^x]-combinations of T0 onto (R, +);
    // each pattern is closed under multiplication by every unit.
    std::vector<std::vector<UnitTerm>> additive_relators;
    std::map<ProductKey, std::vector<UnitTerm>> product_table;
    // Facts imported from outside the artifact, e.g. known finite
    // presentability of a Levi factor.
    std::map<std::string, Tri> facts;
    bool has_model = true;
    CoefficientRing model;

    std::size_t rank() const { return units.size(); }
    bool is_invertible(std::int64_t prime) const;
    void validate() const;
};

// Presets: Z, Z_laurent, Z_half, F<q>_poly / Fq_poly, F<q>_laurent / Fq_laurent,
// O_S (abstract; uses char and S_size).
RingSpec ring_preset(const std::string& name, std::int64_t characteristic = 0, int S_size = 1);
std::vector<std::string> ring_preset_names();

UnitElement unit_one(const RingSpec& ring);
UnitElement unit_generator(const RingSpec& ring, std::size_t i, int power = 1);
UnitElement unit_canonical(const RingSpec& ring, UnitElement u);
UnitElement unit_mul(const RingSpec& ring, const UnitElement& a, const UnitElement& b);
UnitElement unit_pow(const RingSpec& ring, const UnitElement& a, int k);
Poly unit_value(const RingSpec& ring, const UnitElement& u);
bool unit_in_box(const RingSpec& ring, const UnitElement& u, int c);
// Canonically ordered elements of the box A^{[c]}.
std::vector<UnitElement> unit_box(const RingSpec& ring, int c);
// Unit of the box whose value is the integer value, if any.
std::optional<UnitElement> integer_as_unit(const RingSpec& ring, std::int64_t value, int c);
std::string unit_str(const RingSpec& ring, const UnitElement& u);

struct UnitDecomposition {
    UnitElement w;
    int k = 0;
    UnitElement u;
};
UnitDecomposition unit_decompose(const RingSpec& ring, const UnitElement& v, int c);
UnitElement unit_recombine(const RingSpec& ring, const UnitDecomposition& d);

// sum a * w^{2k} * u * x
struct FormalTerm {
    std::int64_t a = 1;
    UnitElement w;
    int k = 0;
    UnitElement u;
    int x = 0;
    bool operator==(const FormalTerm&) const = default;
};
struct FormalRingElement {
    std::vector<FormalTerm> terms;
    bool operator==(const FormalRingElement&) const = default;
};
FormalRingElement formal_from_unit(const RingSpec& ring, const UnitElement& u, int x, int c, std::int64_t a = 1);
Poly formal_value(const RingSpec& ring, const FormalRingElement& r);
FormalRingElement product_expr(const RingSpec& ring, const FormalRingElement& r, const FormalRingElement& s, int m,
                               int n, int c);

bool nvb(const RingSpec& ring, const RootSystemType& t);
Tri qg(const RingSpec& ring, const RootSystemType& t);

struct ToralPair {
    std::string construction;  // "orthogonal", "bystander", "pq"
    int n = 0;
    std::optional<Root> bystander;
    int p = 0, q = 0;
};
ToralPair toral_pair(const RootSystem& rs, const Root& a, const Root& b);
int toral_constant(const RootSystem& rs);

}  // namespace chev
