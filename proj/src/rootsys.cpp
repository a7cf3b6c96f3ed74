#include "chev/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace chev {

bool RootSystemType::valid() const
{
    switch (family) {
    case 'A': return rank >= 1;
    case 'B':
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
    }
}

RootSystemType RootSystemType::parse(const std::string& s)
{
    if (s.size() < 2) throw std::invalid_argument("bad root system type '" + s + "'");
    RootSystemType t;
    t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    std::size_t used = 0;
    try {
        t.rank = std::stoi(s.substr(1), &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad root system type '" + s + "'");
    }
    if (used != s.size() - 1 || !t.valid()) throw std::invalid_argument("bad root system type '" + s + "'");
    return t;
}

int Root::height() const
{
    return std::accumulate(c.begin(), c.end(), 0);
}

bool Root::positive() const
{
    return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; }) && height() > 0;
}

bool Root::negative() const
{
    return std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; }) && height() < 0;
}

Root Root::operator-() const
{
    return scaled(-1);
}

Root Root::operator+(const Root& o) const
{
    Root r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

Root Root::operator-(const Root& o) const
{
    return *this + (-o);
}

Root Root::scaled(int k) const
{
    Root r = *this;
    for (auto& x : r.c) x *= k;
    return r;
}

std::string Root::str() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + "]";
}

namespace {

std::vector<std::vector<int>> gram_matrix(const RootSystemType& t)
{
    const int n = t.rank;
    std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
    auto link = [&](int i, int j, int v) { g[i][j] = g[j][i] = v; };
    switch (t.family) {
    case 'A':
        for (int i = 0; i < n; ++i) g[i][i] = 2;
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
    case 'B':
        for (int i = 0; i < n; ++i) g[i][i] = i + 1 < n ? 4 : 2;
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
        break;
    case 'C':
        for (int i = 0; i < n; ++i) g[i][i] = i + 1 < n ? 2 : 4;
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
        link(n - 2, n - 1, -2);
        break;
    case 'D':
        for (int i = 0; i < n; ++i) g[i][i] = 2;
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
        link(n - 3, n - 1, -1);
        break;
    case 'E':
        for (int i = 0; i < n; ++i) g[i][i] = 2;
        link(0, 2, -1);
        link(1, 3, -1);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
    case 'F':
        g[0][0] = g[1][1] = 4;
        g[2][2] = g[3][3] = 2;
        link(0, 1, -2);
        link(1, 2, -2);
        link(2, 3, -1);
        break;
    case 'G':
        g[0][0] = 2;
        g[1][1] = 6;
        link(0, 1, -3);
        break;
    }
    return g;
}

}  // namespace

RootSystem RootSystem::build(const RootSystemType& t)
{
    if (!t.valid()) throw std::invalid_argument("invalid root system type " + t.name());
    RootSystem rs;
    rs.type_ = t;
    rs.gram_ = gram_matrix(t);
    const int n = t.rank;
    for (int i = 0; i < n; ++i) {
        Root a{std::vector<int>(n, 0)};
        a.c[i] = 1;
        rs.simples_.push_back(a);
    }
    rs.cartan_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs.cartan_[i][j] = 2 * rs.gram_[i][j] / rs.gram_[j][j];

    std::set<std::vector<int>> seen;
    std::deque<Root> todo(rs.simples_.begin(), rs.simples_.end());
    for (const auto& s : rs.simples_) seen.insert(s.c);
    while (!todo.empty()) {
        Root b = todo.front();
        todo.pop_front();
        for (const auto& a : rs.simples_) {
            int k = 2 * rs.inner(b, a) / rs.inner(a, a);
            Root r = b - a.scaled(k);
            if (seen.insert(r.c).second) todo.push_back(r);
        }
    }
    for (const auto& c : seen) rs.roots_.push_back(Root{c});
    std::sort(rs.roots_.begin(), rs.roots_.end(),
              [&](const Root& a, const Root& b) { return rs.precedes(a, b); });
    for (std::size_t i = 0; i < rs.roots_.size(); ++i) rs.index_[rs.roots_[i].c] = static_cast<int>(i);
    return rs;
}

bool RootSystem::precedes(const Root& a, const Root& b) const
{
    int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.c > b.c;
}

std::vector<Root> RootSystem::positive_roots() const
{
    std::vector<Root> out;
    for (const auto& r : roots_)
        if (r.positive()) out.push_back(r);
    return out;
}

int RootSystem::find(const Root& r) const
{
    auto it = index_.find(r.c);
    return it == index_.end() ? -1 : it->second;
}

int RootSystem::index(const Root& r) const
{
    int i = find(r);
    if (i < 0) throw std::invalid_argument(r.str() + " is not a root of " + type_.name());
    return i;
}

int RootSystem::simple_index(const Root& r) const
{
    for (std::size_t i = 0; i < simples_.size(); ++i)
        if (simples_[i] == r) return static_cast<int>(i);
    return -1;
}

int RootSystem::inner(const Root& a, const Root& b) const
{
    int s = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) s += a.c[i] * gram_[i][j] * b.c[j];
    return s;
}

bool RootSystem::is_long(const Root& a) const
{
    int mx = 0;
    for (int i = 0; i < rank(); ++i) mx = std::max(mx, gram_[i][i]);
    return norm2(a) == mx && !type_.simply_laced();
}

int RootSystem::cartan_int(const Root& a, const Root& b) const
{
    if (!contains(a) || !contains(b)) throw std::invalid_argument("cartan_int: argument is not a root");
    return 2 * inner(a, b) / norm2(b);
}

std::vector<Root> RootSystem::subsystem(const std::vector<Root>& X) const
{
    for (const auto& x : X) index(x);
    if (X.empty()) return {};
    // Integer row reduction of X, then test each root for membership in the
    // Z-span by exact elimination.
    std::vector<std::vector<long long>> basis;
    std::vector<int> pivots;
    auto reduce = [&](std::vector<long long> v) {
        // Reduce against the Hermite-like basis; returns the remainder.
        for (std::size_t k = 0; k < basis.size(); ++k) {
            int p = pivots[k];
            if (v[p] == 0) continue;
            if (v[p] % basis[k][p] != 0) return std::make_pair(false, v);
            long long q = v[p] / basis[k][p];
            for (int j = 0; j < rank(); ++j) v[j] -= q * basis[k][j];
        }
        return std::make_pair(true, v);
    };
    {
        // Echelon form over Z via gcd steps.
        std::vector<std::vector<long long>> rows;
        for (const auto& x : X) rows.emplace_back(x.c.begin(), x.c.end());
        std::size_t r = 0;
        for (int col = 0; col < rank() && r < rows.size(); ++col) {
            for (;;) {
                std::size_t best = rows.size();
                for (std::size_t i = r; i < rows.size(); ++i)
                    if (rows[i][col] != 0 && (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col])))
                        best = i;
                if (best == rows.size()) break;
                std::swap(rows[r], rows[best]);
                bool done = true;
                for (std::size_t i = r + 1; i < rows.size(); ++i) {
                    if (rows[i][col] == 0) continue;
                    long long q = rows[i][col] / rows[r][col];
                    for (int j = 0; j < rank(); ++j) rows[i][j] -= q * rows[r][j];
                    if (rows[i][col] != 0) done = false;
                }
                if (done) {
                    basis.push_back(rows[r]);
                    pivots.push_back(col);
                    ++r;
                    break;
                }
            }
        }
    }
    std::vector<Root> out;
    for (const auto& root : roots_) {
        auto [ok, rem] = reduce(std::vector<long long>(root.c.begin(), root.c.end()));
        if (ok && std::all_of(rem.begin(), rem.end(), [](long long v) { return v == 0; })) out.push_back(root);
    }
    return out;
}

std::pair<Root, Root> RootSystem::decompose_positive(const Root& g) const
{
    index(g);
    if (!g.positive() || simple_index(g) >= 0)
        throw std::invalid_argument("decompose_positive needs a positive non-simple root");
    for (const auto& a : simples_) {
        Root b = g - a;
        if (contains(b) && b.positive()) return {a, b};
    }
    throw std::logic_error("no decomposition found");
}

Root RootSystem::reflect(const Root& a, const Root& b) const
{
    return b - a.scaled(cartan_int(b, a));
}

std::pair<std::vector<Root>, Root> RootSystem::weyl_route_to_simple(const Root& g) const
{
    index(g);
    if (!g.positive()) throw std::invalid_argument("weyl_route_to_simple needs a positive root");
    std::map<std::vector<int>, std::pair<std::vector<int>, int>> parent;
    std::deque<Root> q{g};
    parent[g.c] = {{}, -1};
    while (!q.empty()) {
        Root cur = q.front();
        q.pop_front();
        if (simple_index(cur) >= 0) {
            std::vector<Root> word;
            std::vector<int> at = cur.c;
            while (parent[at].second >= 0) {
                word.push_back(simples_[static_cast<std::size_t>(parent[at].second)]);
                at = parent[at].first;
            }
            std::reverse(word.begin(), word.end());
            return {word, cur};
        }
        for (int i = 0; i < rank(); ++i) {
            Root nxt = reflect(simples_[i], cur);
            if (!parent.count(nxt.c)) {
                parent[nxt.c] = {cur.c, i};
                q.push_back(nxt);
            }
        }
    }
    throw std::logic_error("no Weyl route found");
}

std::vector<int> RootSystem::coroot_coords(const Root& a) const
{
    std::vector<int> out(rank());
    int n = norm2(a);
    for (int i = 0; i < rank(); ++i) {
        int num = a.c[i] * gram_[i][i];
        if (num % n != 0) throw std::logic_error("non-integral coroot");
        out[i] = num / n;
    }
    return out;
}

}  // namespace chev
