#pragma once

#include "chev/chevmodel.hpp"
#include "chev/parab.hpp"
#include "chev/ringspec.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chev {

// x: root element of the Levi part or of a schematic presentation,
// xt: root element of the kernel (or of the Borel in the Borel build),
// h: torus element h_root(A[gen]).
enum class SymKind { x, xt, h };

struct GenSymbol {
    SymKind kind = SymKind::x;
    Root root;
    UnitElement unit;  // x / xt: argument unit * T0[t0]
    int t0 = 0;
    int gen = 0;  // h: index of the unit generator
    bool operator==(const GenSymbol&) const = default;
    auto operator<=>(const GenSymbol&) const = default;
};

struct Letter {
    GenSymbol sym;
    int exp = 1;
    bool operator==(const Letter&) const = default;
};

// Free-reduced word over generator symbols.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);
    static Word single(const GenSymbol& s, int exp = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    Word inverse() const;
    Word operator*(const Word& o) const;
    Word& operator*=(const Word& o);
    Word pow(int k) const;
    bool operator==(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

Word commutator(const Word& a, const Word& b);
// One left-expansion step [ab, c] = a [b, c] a^-1 [a, c], with a the first
// letter of w1; returns the two factors a[b,c]a^-1 and [a,c].
std::pair<Word, Word> commutator_expand_factors(const Word& w1, const Word& w2);
Word commutator_expand(const Word& w1, const Word& w2);

class Refusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Truncation {
    int max_T = 8;
    int max_exponent = 3;
};

struct Presentation {
    std::string kind;
    RootSystemType type;
    std::vector<int> I;
    std::string ring;
    int c = 0;
    bool finite = false;
    std::vector<GenSymbol> generators;
    std::vector<Word> relators;
    std::vector<std::string> families;
    // Sum of adjacency levels of the two roots of a commutator relator, or -1.
    std::vector<int> levels;
    std::map<std::string, std::string> metadata;

    void add(Word w, const std::string& family, int level = -1);
    std::map<std::string, std::size_t> family_counts() const;
};

// Shared data for one build: root system, ring, box constant, structure
// constants and the enumerated T-tilde.
struct BuildContext {
    std::shared_ptr<const RootSystem> rs;
    std::shared_ptr<const ChevalleyBasisData> cb;
    std::shared_ptr<const StructureConstantTable> table;
    RingSpec ring;
    int c = 0;
    std::vector<std::pair<UnitElement, int>> ttilde;

    BuildContext(std::shared_ptr<const RootSystem> rs, RingSpec ring);
};

GenSymbol x_symbol(SymKind kind, const Root& root, const UnitElement& u, int t0);
GenSymbol h_symbol(const Root& root, int gen);
// prod_j h_root(A_j)^{w_j * k}
Word h_unit_word(const RingSpec& ring, const Root& root, const UnitElement& w, int k);

// zeta(g, h, t1^m, t2^n) summed over the commutator terms of (g, h), with
// target-root symbols of the given kind. boxed = false keeps full units
// (schematic presentations, no torus letters).
Word zeta_word(const BuildContext& ctx, const std::vector<StructureConstant>& constants, const Root& g, const Root& h,
               const std::pair<UnitElement, int>& t1, const std::pair<UnitElement, int>& t2, SymKind kind, bool boxed);
Word commutator_relator(const BuildContext& ctx, const std::vector<StructureConstant>& constants, SymKind kg,
                        const Root& g, const std::pair<UnitElement, int>& t1, SymKind kh, const Root& h,
                        const std::pair<UnitElement, int>& t2, SymKind target, bool boxed);

// k and u' with v^{E} u = v^{k d} u' and u' in the box, choosing the
// remainder closest to zero; nullopt when no admissible u' exists.
std::optional<std::pair<int, UnitElement>> torus_shift(const RingSpec& ring, int c, const UnitElement& u, int gen,
                                                      int E, int d);

std::vector<std::pair<UnitElement, int>> truncated_T(const RingSpec& ring, const Truncation& tr);

Presentation present_unipotent(const ParabolicSpec& spec, const RingSpec& ring, const Truncation& tr = {});
Presentation present_kernel(const ParabolicSpec& spec, const RingSpec& ring, const Truncation& tr = {});
Presentation present_borel_finite(const std::shared_ptr<const RootSystem>& rs, const RingSpec& ring,
                                  const std::map<std::vector<int>, Presentation>& per_root = {});
Presentation present_parabolic_case1(const ParabolicSpec& spec, const RingSpec& ring);
Presentation present_parabolic_nvb(const ParabolicSpec& spec, const RingSpec& ring);

bool is_g2_long_exception(const ParabolicSpec& spec);

std::string symbol_str(const RingSpec& ring, const GenSymbol& s);
std::string word_str(const RingSpec& ring, const Word& w);

}  // namespace chev
