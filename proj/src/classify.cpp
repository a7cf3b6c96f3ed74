#include "chev/classify.hpp"

#include "chev/presgen.hpp"

#include <algorithm>

namespace chev {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::finitely_presented: return "finitely_presented";
    case Verdict::not_finitely_presented: return "not_finitely_presented";
    case Verdict::equivalent_to_LE: return "equivalent_to_LE";
    case Verdict::unknown: return "unknown";
    }
    return "unknown";
}

namespace {

bool is_maximal(const ParabolicSpec& spec)
{
    return static_cast<int>(spec.I.size()) == spec.rs->rank() - 1;
}

std::string describe(const ParabolicSpec& spec)
{
    std::string s = spec.rs->type().name() + " with I = {";
    for (std::size_t k = 0; k < spec.I.size(); ++k) s += (k ? "," : "") + std::to_string(spec.I[k] + 1);
    return s + "}";
}

}  // namespace

FPStatus ring_rule(const ParabolicSpec& spec, const RingSpec& ring, Tri le_status)
{
    if (ring.parabolics_fg != Tri::yes)
        throw Refusal("parabolic subgroups over " + ring.name +
                      " are not known to be finitely generated (over F_q[t] they are not, by Nagao)");
    FPStatus st;
    auto add = [&](const std::string& rule, const std::string& cite, const std::string& line) {
        st.reasons.push_back({rule, cite, line});
    };
    add("finite-generation", "standing assumption", "parabolic subgroups over " + ring.name + " are finitely generated");
    if (le_status == Tri::no) {
        add("retract-necessity", "retracts of finitely presented groups",
            "the extended Levi factor is a retract of the parabolic and is not finitely presented");
        st.verdict = Verdict::not_finitely_presented;
        return st;
    }
    const bool nvb_holds = nvb(ring, spec.rs->type());
    if (is_g2_long_exception(spec) && ring.borel2_fp != Tri::yes) {
        add("g2-long-exception", "G2 long-root parabolic",
            "I is a single long root of G2 and the rank-one Borel over " + ring.name +
                " is not known to be finitely presented; the commutator computations are inconclusive here");
        st.verdict = Verdict::unknown;
        return st;
    }
    Tri q = qg(ring, spec.rs->type());
    if (q != Tri::yes) {
        add("not-qg", "QG condition",
            ring.name + " is not NVB for " + spec.rs->type().name() + " and the rank-one Borel is " +
                (q == Tri::no ? "not finitely presented" : "not known to be finitely presented"));
        st.verdict = Verdict::unknown;
        return st;
    }
    add("qg", "QG condition",
        nvb_holds ? ring.name + " is NVB for " + spec.rs->type().name()
                  : "the rank-one Borel over " + ring.name + " is finitely presented");
    if (!spec.is_borel() && is_maximal(spec) && spec.rs->type().simply_laced() && spec.rs->rank() >= 2)
        add("levi-factor-equivalence", "simply-laced maximal parabolic",
            "every simple root outside I is adjacent to I, so the extended Levi factor is the Levi factor");
    add("extended-levi-equivalence", "parabolic vs extended Levi factor",
        describe(spec) + " is finitely presented iff its extended Levi factor is");
    if (le_status == Tri::yes) {
        add("levi-known", "supplied", "the extended Levi factor is finitely presented");
        st.verdict = Verdict::finitely_presented;
    } else {
        st.verdict = Verdict::equivalent_to_LE;
    }
    return st;
}

std::vector<int> levi_ranks(const ParabolicSpec& spec)
{
    std::vector<int> out;
    for (const auto& c : profile(spec).levi_components) out.push_back(static_cast<int>(c.size()));
    return out;
}

FPStatus arithmetic_rule(const ParabolicSpec& spec, const Arithmetic& arith, const std::vector<int>& ranks, bool nvb_holds)
{
    if (arith.S_size < 1) throw std::invalid_argument("|S| must be at least 1");
    if (static_cast<int>(spec.I.size()) == spec.rs->rank())
        throw std::invalid_argument("the parabolic must be proper");
    FPStatus st;
    auto add = [&](const std::string& rule, const std::string& cite, const std::string& line) {
        st.reasons.push_back({rule, cite, line});
    };
    const std::string S = std::to_string(arith.S_size);
    if (arith.global_char == 0) {
        add("number-field", "Borel-Serre; Abels", "S-arithmetic parabolics over number fields are finitely presented");
        st.verdict = Verdict::finitely_presented;
        return st;
    }
    if (arith.S_size == 1) {
        add("function-field-one-place", "open case",
            "|S| = 1 over a function field is outside the hypotheses and its status is unknown");
        st.verdict = Verdict::unknown;
        return st;
    }
    if (retracts_onto_almost_borel(spec)) {
        add("almost-borel", "Bux",
            std::string(spec.is_borel() ? "the Borel subgroup" : "a simple root is not adjacent to I, so the parabolic") +
                " retracts onto an almost Borel group; finitely presented iff |S| >= 3, here |S| = " + S);
        st.verdict = arith.S_size >= 3 ? Verdict::finitely_presented : Verdict::not_finitely_presented;
        return st;
    }
    if (!nvb_holds) {
        add("nvb-missing", "NVB condition", "the field is not NVB for " + spec.rs->type().name());
        st.verdict = Verdict::unknown;
        return st;
    }
    if (ranks.empty()) throw std::invalid_argument("levi ranks are required outside the almost Borel case");
    int d = arith.S_size * *std::min_element(ranks.begin(), ranks.end());
    add("levi-rank", "Behr",
        "the parabolic is finitely presented iff its Levi factor is; d = min |S| rk = " + std::to_string(d) +
            (d >= 3 ? " >= 3" : " < 3"));
    if (is_g2_long_exception(spec)) add("g2-long-covered", "S-arithmetic rule", "the G2 long-root parabolic is covered here");
    st.verdict = d >= 3 ? Verdict::finitely_presented : Verdict::not_finitely_presented;
    return st;
}

std::string levi_fact_key(const ParabolicSpec& spec)
{
    const RootSystemType t = spec.rs->type();
    std::string key = "levi_fp:" + t.name() + ":";
    if (t.family == 'A') {
        // Block sizes: a new block starts after every simple root outside I.
        int run = 1;
        std::string blocks;
        for (int i = 0; i < t.rank; ++i) {
            if (std::find(spec.I.begin(), spec.I.end(), i) != spec.I.end()) {
                ++run;
            } else {
                blocks += std::to_string(run) + ",";
                run = 1;
            }
        }
        return key + blocks + std::to_string(run);
    }
    key += "I=";
    for (std::size_t k = 0; k < spec.I.size(); ++k) key += (k ? "," : "") + std::to_string(spec.I[k] + 1);
    return key;
}

Tri infer_le_status(const ParabolicSpec& spec, const RingSpec& ring)
{
    auto it = ring.facts.find(levi_fact_key(spec));
    if (it != ring.facts.end()) return it->second;
    if (spec.is_borel()) return ring.borel2_fp;
    // A simple root outside I and not adjacent to it gives a retraction of the
    // extended Levi factor onto the rank-one Borel.
    if (retracts_onto_almost_borel(spec) && ring.borel2_fp == Tri::no) return Tri::no;
    return Tri::unknown;
}

std::pair<FPStatus, FPStatus> gl12_block_example(const RingSpec& ring)
{
    auto run = [&](const std::vector<int>& blocks) {
        ParabolicSpec spec = blocks_to_I(12, blocks);
        if (!ring.has_model && ring.arithmetic)
            return arithmetic_rule(spec, *ring.arithmetic, levi_ranks(spec), nvb(ring, spec.rs->type()));
        if (ring.name != "Z_laurent")
            throw std::invalid_argument("the block example is stated over Z_laurent or a number-field O_S");
        return ring_rule(spec, ring, infer_le_status(spec, ring));
    };
    return {run({1, 5, 1, 5}), run({5, 1, 1, 5})};
}

}  // namespace chev
