#include "chev/parab.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace chev {

ParabolicSpec::ParabolicSpec(std::shared_ptr<const RootSystem> r, std::vector<int> idx) : rs(std::move(r)), I(std::move(idx))
{
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
    for (int i : I)
        if (i < 0 || i >= rs->rank()) throw std::out_of_range("simple root index out of range");
}

std::vector<Root> ParabolicSpec::I_roots() const
{
    std::vector<Root> out;
    for (int i : I) out.push_back(rs->simple(i));
    return out;
}

bool adjacent(const RootSystem& rs, int i, int j)
{
    return i != j && rs.cartan()[i][j] != 0;
}

namespace {

bool in(const std::vector<Root>& v, const Root& r)
{
    return std::find(v.begin(), v.end(), r) != v.end();
}

std::vector<Root> positive_part(const std::vector<Root>& v)
{
    std::vector<Root> out;
    for (const auto& r : v)
        if (r.positive()) out.push_back(r);
    return out;
}

}  // namespace

ParabolicProfile profile(const ParabolicSpec& spec, std::optional<int> borel_n)
{
    const RootSystem& rs = *spec.rs;
    const int n = rs.rank();
    std::set<int> I(spec.I.begin(), spec.I.end());
    ParabolicProfile p;
    std::vector<int> nonadj_idx;
    for (int i = 0; i < n; ++i) {
        if (I.count(i)) continue;
        bool adj = std::any_of(I.begin(), I.end(), [&](int j) { return adjacent(rs, i, j); });
        (adj ? p.adj : p.nonadj).push_back(rs.simple(i));
        if (!adj) nonadj_idx.push_back(i);
    }
    std::vector<int> ext_idx(spec.I);
    ext_idx.insert(ext_idx.end(), nonadj_idx.begin(), nonadj_idx.end());
    std::sort(ext_idx.begin(), ext_idx.end());
    for (int i : ext_idx) p.ext.push_back(rs.simple(i));

    // Connected components of I in the Dynkin diagram.
    std::set<int> left(I);
    while (!left.empty()) {
        std::vector<int> comp{*left.begin()};
        left.erase(left.begin());
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (auto it = left.begin(); it != left.end();) {
                if (adjacent(rs, comp[k], *it)) {
                    comp.push_back(*it);
                    it = left.erase(it);
                } else {
                    ++it;
                }
            }
        std::sort(comp.begin(), comp.end());
        std::vector<Root> c;
        for (int i : comp) c.push_back(rs.simple(i));
        p.levi_components.push_back(c);
    }

    p.levi_roots = rs.subsystem(spec.I_roots());
    p.le_roots = p.levi_roots;
    std::vector<Root> nonadj_span = rs.subsystem(p.nonadj);
    if (spec.is_borel() && borel_n) {
        if (*borel_n < 0 || *borel_n >= n) throw std::out_of_range("borel index out of range");
        p.borel_n = borel_n;
        p.le_roots.push_back(rs.simple(*borel_n));
    } else {
        for (const auto& r : positive_part(nonadj_span)) p.le_roots.push_back(r);
    }
    std::vector<Root> ext_span = rs.subsystem(p.ext);
    for (const auto& r : rs.roots()) {
        if (!r.positive()) continue;
        if (!in(p.levi_roots, r)) p.unipotent_roots.push_back(r);
        if (p.borel_n) {
            if (r != rs.simple(*p.borel_n)) p.kernel_roots.push_back(r);
        } else if (!in(ext_span, r)) {
            p.kernel_roots.push_back(r);
        }
    }
    auto by_order = [&](const Root& a, const Root& b) { return rs.precedes(a, b); };
    std::sort(p.le_roots.begin(), p.le_roots.end(), by_order);
    return p;
}

std::pair<Root, Root> adj_decompose(const ParabolicSpec& spec, const Root& a)
{
    const RootSystem& rs = *spec.rs;
    int ai = rs.simple_index(a);
    if (ai < 0) throw std::invalid_argument("adj_decompose needs a simple root");
    for (int d : spec.I) {
        if (adjacent(rs, ai, d)) {
            Root delta = rs.simple(d);
            return {-delta, delta + a};
        }
    }
    throw std::invalid_argument("root is not adjacent to I");
}

int alvl(const ParabolicSpec& spec, const Root& g)
{
    ParabolicProfile p = profile(spec);
    if (spec.is_borel() || !in(p.kernel_roots, g)) throw std::invalid_argument("alvl is defined on kernel roots only");
    int s = 0;
    for (const auto& a : p.adj) s += g.c[static_cast<std::size_t>(spec.rs->simple_index(a))];
    return s;
}

bool retracts_onto_almost_borel(const ParabolicSpec& spec)
{
    return spec.is_borel() || !profile(spec).nonadj.empty();
}

ParabolicSpec blocks_to_I(int n, const std::vector<int>& blocks)
{
    if (n < 2) throw std::invalid_argument("blocks need n >= 2");
    int total = 0;
    std::set<int> cuts;
    for (int b : blocks) {
        if (b <= 0) throw std::invalid_argument("block sizes must be positive");
        total += b;
        if (total < n) cuts.insert(total);
    }
    if (total != n) throw std::invalid_argument("blocks do not sum to n");
    std::vector<int> I;
    for (int i = 1; i < n; ++i)
        if (!cuts.count(i)) I.push_back(i - 1);
    auto rs = std::make_shared<const RootSystem>(RootSystem::build({'A', n - 1}));
    return ParabolicSpec(rs, I);
}

}  // namespace chev
