#include "chev/parab.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace chev;
using testing_support::make_system;

namespace {

std::set<int> simple_indices(const RootSystem& rs, const std::vector<Root>& v)
{
    std::set<int> out;
    for (const auto& r : v) out.insert(rs.simple_index(r));
    return out;
}

// Adjacency straight from the Cartan matrix, independent of the library's helper.
bool edge(const RootSystem& rs, int i, int j)
{
    return i != j && rs.cartan()[i][j] != 0;
}

}  // namespace

TEST_CASE("block layouts of the twelve-by-twelve example")
{
    auto p1 = blocks_to_I(12, {1, 5, 1, 5});
    CHECK(p1.I == std::vector<int>{1, 2, 3, 4, 7, 8, 9, 10});
    auto prof1 = profile(p1);
    CHECK(prof1.nonadj.empty());
    CHECK(prof1.le_roots.size() == prof1.levi_roots.size());
    CHECK_FALSE(retracts_onto_almost_borel(p1));

    auto p2 = blocks_to_I(12, {5, 1, 1, 5});
    CHECK(p2.I == std::vector<int>{0, 1, 2, 3, 7, 8, 9, 10});
    auto prof2 = profile(p2);
    REQUIRE(prof2.nonadj.size() == 1);
    CHECK(prof2.nonadj[0] == p2.rs->simple(5));
    CHECK(retracts_onto_almost_borel(p2));

    CHECK(blocks_to_I(5, {1, 1, 1, 1, 1}).is_borel());
    CHECK(blocks_to_I(5, {5}).is_whole());
    CHECK_THROWS(blocks_to_I(5, {2, 2}));
}

TEST_CASE("the whole group has no adjacent roots and no kernel")
{
    for (const auto& name : testing_support::rank_le_4()) {
        auto rs = make_system(name);
        std::vector<int> all;
        for (int i = 0; i < rs->rank(); ++i) all.push_back(i);
        auto prof = profile(ParabolicSpec(rs, all));
        CHECK(prof.adj.empty());
        CHECK(prof.nonadj.empty());
        CHECK(prof.kernel_roots.empty());
        CHECK(prof.unipotent_roots.empty());
    }
}

TEST_CASE("adjacent decomposition")
{
    auto a2 = make_system("A2");
    auto [abar, bbar] = adj_decompose(ParabolicSpec(a2, {0}), a2->simple(1));
    CHECK(abar == -a2->simple(0));
    CHECK(bbar == a2->simple(0) + a2->simple(1));

    auto a3 = make_system("A3");
    auto d = adj_decompose(ParabolicSpec(a3, {1}), a3->simple(0));
    CHECK(d.first == -a3->simple(1));
    CHECK(d.second == a3->simple(0) + a3->simple(1));

    auto a4 = make_system("A4");
    // alpha_4 is not adjacent to I = {alpha_1}.
    CHECK_THROWS(adj_decompose(ParabolicSpec(a4, {0}), a4->simple(3)));
}

TEST_CASE("adjacency levels")
{
    auto a2 = make_system("A2");
    ParabolicSpec s(a2, {0});
    CHECK(alvl(s, a2->simple(1)) == 1);
    CHECK(alvl(s, a2->simple(0) + a2->simple(1)) == 1);
    CHECK_THROWS(alvl(s, a2->simple(0)));

    auto b2 = make_system("B2");
    ParabolicSpec sb(b2, {0});  // alpha_1 is the long simple root
    std::set<int> short_levels;
    for (const auto& g : profile(sb).kernel_roots)
        if (!b2->is_long(g)) short_levels.insert(alvl(sb, g));
    CHECK(short_levels == std::set<int>{1});
    std::set<int> levels;
    for (const auto& g : profile(sb).kernel_roots) levels.insert(alvl(sb, g));
    CHECK(levels == std::set<int>{1, 2});
}

TEST_CASE("kernel of A3 with I = {alpha1, alpha3}")
{
    auto a3 = make_system("A3");
    ParabolicSpec s(a3, {0, 2});
    auto prof = profile(s);
    CHECK(prof.nonadj.empty());
    CHECK(prof.kernel_roots.size() == 4);
    for (const auto& g : prof.kernel_roots) CHECK(g.c[1] >= 1);
}

TEST_CASE("partition identities and kernel grading for every subset")
{
    for (const auto& name : testing_support::rank_le_4()) {
        auto rs = make_system(name);
        CAPTURE(name);
        for (const auto& I : testing_support::subsets(rs->rank())) {
            ParabolicSpec s(rs, I);
            auto prof = profile(s, I.empty() ? std::optional<int>(0) : std::nullopt);
            std::set<int> Iset(I.begin(), I.end());
            auto adj = simple_indices(*rs, prof.adj), nonadj = simple_indices(*rs, prof.nonadj),
                 ext = simple_indices(*rs, prof.ext);

            // Independent oracle for Adj and nonAdj.
            std::set<int> adj_oracle, nonadj_oracle;
            for (int j = 0; j < rs->rank(); ++j) {
                if (Iset.count(j)) continue;
                bool a = std::any_of(I.begin(), I.end(), [&](int i) { return edge(*rs, i, j); });
                (a ? adj_oracle : nonadj_oracle).insert(j);
            }
            CHECK(adj == adj_oracle);
            CHECK(nonadj == nonadj_oracle);

            std::set<int> ext_oracle = Iset;
            ext_oracle.insert(nonadj.begin(), nonadj.end());
            CHECK(ext == ext_oracle);
            CHECK(Iset.size() + adj.size() + nonadj.size() == static_cast<std::size_t>(rs->rank()));

            // A positive root is in the kernel iff it has a nonzero Adj coefficient.
            std::size_t kernel_oracle = 0;
            for (const auto& g : rs->positive_roots()) {
                bool k = std::any_of(adj_oracle.begin(), adj_oracle.end(), [&](int j) { return g.c[j] != 0; });
                kernel_oracle += k;
            }
            if (!I.empty()) CHECK(prof.kernel_roots.size() == kernel_oracle);

            if (I.empty()) continue;
            std::set<std::vector<int>> kernel;
            for (const auto& g : prof.kernel_roots) kernel.insert(g.c);
            for (const auto& g : prof.kernel_roots)
                for (const auto& h : prof.kernel_roots)
                    if (rs->contains(g + h)) {
                        CHECK(kernel.count((g + h).c));
                        CHECK(alvl(s, g + h) == alvl(s, g) + alvl(s, h));
                    }
            // Maximal parabolics whose complement is adjacent have LE = L.
            if (nonadj.empty()) CHECK(prof.le_roots.size() == prof.levi_roots.size());
        }
    }
}

TEST_CASE("Borel extended Levi factors")
{
    auto b3 = make_system("B3");
    ParabolicSpec s(b3, {});
    CHECK(retracts_onto_almost_borel(s));
    for (int n = 0; n < 3; ++n) {
        auto prof = profile(s, n);
        REQUIRE(prof.borel_n);
        CHECK(*prof.borel_n == n);
        CHECK(std::find(prof.le_roots.begin(), prof.le_roots.end(), b3->simple(n)) != prof.le_roots.end());
    }
}
