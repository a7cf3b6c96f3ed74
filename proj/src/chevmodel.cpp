#include "chev/chevmodel.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace chev {

namespace {

// Exact rational used while propagating bracket signs.
struct Frac {
    long long num = 0, den = 1;
    Frac() = default;
    Frac(long long n, long long d = 1)
    {
        if (d < 0) n = -n, d = -d;
        long long g = std::gcd(n < 0 ? -n : n, d);
        num = g ? n / g : 0;
        den = g ? d / g : 1;
    }
    Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
    Frac operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
    Frac operator/(const Frac& o) const { return Frac(num * o.den, den * o.num); }
};

}  // namespace

std::shared_ptr<const ChevalleyBasisData> ChevalleyBasisData::build(const RootSystem& rs)
{
    auto cb = std::make_shared<ChevalleyBasisData>();
    cb->rs_ = rs;
    const auto& roots = rs.roots();
    const std::size_t R = roots.size();
    cb->nroots_ = R;
    const int unknown = 1 << 20;
    cb->n_.assign(R * R, unknown);

    // Extraspecial pair of each positive non-simple root: smallest simple a
    // with xi - a a positive root.
    std::map<std::vector<int>, std::pair<Root, Root>> extra;
    for (const auto& xi : roots) {
        if (!xi.positive() || rs.simple_index(xi) >= 0) continue;
        auto [a, b] = rs.decompose_positive(xi);
        extra[xi.c] = {a, b};
        cb->extraspecial_.emplace_back(a, b);
    }
    auto string_below = [&](const Root& a, const Root& b) {
        int p = 0;
        while (rs.contains(b - a.scaled(p + 1))) ++p;
        return p;
    };

    std::function<int(int, int)> N = [&](int i, int j) -> int {
        int& slot = cb->n_[static_cast<std::size_t>(i) * R + j];
        if (slot != unknown) return slot;
        const Root& r = roots[i];
        const Root& s = roots[j];
        Root sum = r + s;
        int value = 0;
        if (!rs.contains(sum)) {
            value = 0;
        } else if (r.positive() && s.positive()) {
            if (rs.precedes(s, r)) {
                value = -N(j, i);
            } else {
                const auto& [a, b] = extra.at(sum.c);
                if (a == r && b == s) {
                    value = string_below(r, s) + 1;
                } else {
                    Frac acc(0);
                    Root sa = s - a;
                    if (rs.contains(sa))
                        acc = acc + Frac(static_cast<long long>(N(j, rs.index(-a))) * N(i, rs.index(-b)), rs.norm2(sa));
                    Root ra = r - a;
                    if (rs.contains(ra))
                        acc = acc + Frac(static_cast<long long>(N(rs.index(-a), i)) * N(j, rs.index(-b)), rs.norm2(ra));
                    Frac v = Frac(rs.norm2(sum)) * acc / Frac(N(rs.index(a), rs.index(b)));
                    if (v.den != 1) throw std::logic_error("non-integral structure constant");
                    value = static_cast<int>(v.num);
                }
            }
        } else if (r.negative() && s.negative()) {
            value = -N(rs.index(-r), rs.index(-s));
        } else {
            Root t = -sum;
            bool t_like_s = t.positive() == s.positive();
            Frac v = t_like_s ? Frac(rs.norm2(t), rs.norm2(r)) * Frac(N(j, rs.index(t)))
                              : Frac(rs.norm2(t), rs.norm2(s)) * Frac(N(rs.index(t), i));
            if (v.den != 1) throw std::logic_error("non-integral structure constant");
            value = static_cast<int>(v.num);
        }
        cb->n_[static_cast<std::size_t>(i) * R + j] = value;
        return value;
    };
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < R; ++j) N(static_cast<int>(i), static_cast<int>(j));

    // Divided powers of ad(X_a) on the lattice spanned by X_b and H_i.
    const std::size_t D = cb->adjoint_dim();
    cb->dp_.resize(R);
    for (std::size_t ai = 0; ai < R; ++ai) {
        std::vector<std::vector<long long>> ad(D, std::vector<long long>(D, 0));
        for (std::size_t col = 0; col < D; ++col)
            for (const auto& [row, v] : cb->bracket_basis(static_cast<int>(ai), static_cast<int>(col)))
                ad[row][col] = v;
        auto power = ad;
        long long fact = 1;
        for (int k = 1;; ++k) {
            fact *= k;
            bool any = false;
            for (std::size_t r = 0; r < D; ++r)
                for (std::size_t c = 0; c < D; ++c) {
                    if (power[r][c] == 0) continue;
                    if (power[r][c] % fact != 0) throw std::logic_error("divided power not integral");
                    cb->dp_[ai].push_back({static_cast<int>(r), static_cast<int>(c), k, power[r][c] / fact});
                    any = true;
                }
            if (!any) break;
            std::vector<std::vector<long long>> next(D, std::vector<long long>(D, 0));
            for (std::size_t r = 0; r < D; ++r)
                for (std::size_t m = 0; m < D; ++m) {
                    if (ad[r][m] == 0) continue;
                    for (std::size_t c = 0; c < D; ++c) next[r][c] += ad[r][m] * power[m][c];
                }
            power = std::move(next);
        }
    }
    return cb;
}

int ChevalleyBasisData::bracket(const Root& a, const Root& b) const
{
    return bracket_by_index(rs_.index(a), rs_.index(b));
}

std::map<int, long long> ChevalleyBasisData::bracket_basis(int u, int v) const
{
    const int R = static_cast<int>(nroots_);
    std::map<int, long long> out;
    auto add = [&](int k, long long c) {
        if (c == 0) return;
        if ((out[k] += c) == 0) out.erase(k);
    };
    if (u >= R && v >= R) return out;
    if (u >= R) {
        auto r = bracket_basis(v, u);
        for (auto& [k, c] : r) c = -c;
        return r;
    }
    const Root& a = rs_.roots()[u];
    if (v >= R) {
        add(u, -rs_.cartan_int(a, rs_.simple(v - R)));
        return out;
    }
    const Root& b = rs_.roots()[v];
    if (b == -a) {
        auto co = rs_.coroot_coords(a);
        for (int i = 0; i < rs_.rank(); ++i) add(R + i, co[i]);
        return out;
    }
    int n = bracket_by_index(u, v);
    if (n) add(rs_.index(a + b), n);
    return out;
}

const std::vector<ChevalleyBasisData::DividedPowerEntry>& ChevalleyBasisData::divided_powers(const Root& a) const
{
    return dp_.at(static_cast<std::size_t>(rs_.index(a)));
}

ModelMatrix GroupModel::w(const Root& a, std::int64_t modulus) const
{
    Poly one = Poly::constant(1, modulus);
    return x(a, one) * x_inv(-a, one) * x(a, one);
}

ModelMatrix AdjointModel::x(const Root& a, const Poly& f) const
{
    ModelMatrix m = ModelMatrix::identity(dim(), f.modulus());
    if (f.is_zero()) return m;
    std::vector<Poly> powers{Poly::constant(1, f.modulus()), f};
    for (const auto& e : cb_->divided_powers(a)) {
        while (static_cast<int>(powers.size()) <= e.power) powers.push_back(powers.back() * f);
        m.at(e.row, e.col) += powers[e.power].scaled(e.value);
    }
    return m;
}

ModelMatrix AdjointModel::h(const Root& a, const Poly& u) const
{
    ModelMatrix m = ModelMatrix::identity(dim(), u.modulus());
    const auto& roots = rs().roots();
    for (std::size_t k = 0; k < roots.size(); ++k) m.at(k, k) = u.unit_pow(rs().cartan_int(roots[k], a));
    return m;
}

Poly AdjointModel::root_coordinate(const ModelMatrix& M, const Root& g) const
{
    int best = -1, bestv = 0;
    for (int i = 0; i < rs().rank(); ++i) {
        int v = rs().cartan_int(g, rs().simple(i));
        if (v != 0 && (best < 0 || std::abs(v) < std::abs(bestv))) best = i, bestv = v;
    }
    std::size_t col = rs().roots().size() + static_cast<std::size_t>(best);
    return M.at(static_cast<std::size_t>(rs().index(g)), col).div_exact(-bestv);
}

ModelMatrix x_sln(int n, int i, int j, const Poly& f)
{
    if (i == j) throw std::invalid_argument("x_sln needs i != j");
    if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("x_sln index out of range");
    ModelMatrix m = ModelMatrix::identity(static_cast<std::size_t>(n), f.modulus());
    m.at(i - 1, j - 1) = f;
    return m;
}

ModelMatrix h_sln(int n, int i, int j, const Poly& u)
{
    if (i == j) throw std::invalid_argument("h_sln needs i != j");
    ModelMatrix m = ModelMatrix::identity(static_cast<std::size_t>(n), u.modulus());
    m.at(i - 1, i - 1) = u;
    m.at(j - 1, j - 1) = u.unit_inverse();
    return m;
}

SlnModel::SlnModel(std::shared_ptr<const ChevalleyBasisData> cb) : cb_(std::move(cb))
{
    if (cb_->rs().type().family != 'A') throw std::invalid_argument("SL_n model needs type A");
    n_ = cb_->rs().rank() + 1;
    AdjointModel adj(cb_);
    const auto& rs = cb_->rs();
    for (const auto& g : rs.roots()) {
        if (!g.positive()) continue;
        if (rs.simple_index(g) >= 0) {
            sign_[g.c] = 1;
            continue;
        }
        auto [a, b] = rs.decompose_positive(g);
        int c_adj = structure_constants(adj, a, b).at(0).C;
        auto [i, j] = position(a);
        auto [k, l] = position(b);
        int c_sl = j == k ? 1 : (l == i ? -1 : 0);
        if (c_sl == 0) throw std::logic_error("inconsistent SL_n positions");
        sign_[g.c] = c_sl * sign_.at(a.c) * sign_.at(b.c) / c_adj;
    }
    for (const auto& g : rs.roots())
        if (g.negative()) sign_[g.c] = sign_.at((-g).c);
}

std::pair<int, int> SlnModel::position(const Root& a) const
{
    Root p = a.positive() ? a : -a;
    int first = -1, last = -1;
    for (int i = 0; i < static_cast<int>(p.c.size()); ++i)
        if (p.c[i] != 0) {
            if (first < 0) first = i;
            last = i;
        }
    return a.positive() ? std::make_pair(first, last + 1) : std::make_pair(last + 1, first);
}

ModelMatrix SlnModel::x(const Root& a, const Poly& f) const
{
    auto [i, j] = position(a);
    return x_sln(n_, i + 1, j + 1, f.scaled(sign(a)));
}

ModelMatrix SlnModel::h(const Root& a, const Poly& u) const
{
    auto [i, j] = position(a);
    return h_sln(n_, i + 1, j + 1, u);
}

Poly SlnModel::root_coordinate(const ModelMatrix& M, const Root& g) const
{
    auto [i, j] = position(g);
    return M.at(i, j).scaled(sign(g));
}

CoefficientRing symbolic_ring(std::int64_t modulus)
{
    CoefficientRing ring;
    ring.modulus = modulus;
    ring.add_var("r", false);
    ring.add_var("s", false);
    ring.add_var("u", true);
    return ring;
}

namespace {

struct Term {
    int m, n;
    Root root;
};

std::vector<Term> commutator_terms(const RootSystem& rs, const Root& a, const Root& b)
{
    std::vector<Term> out;
    for (int total = 2; total <= 6; ++total)
        for (int m = 1; m < total; ++m) {
            Root g = a.scaled(m) + b.scaled(total - m);
            if (rs.contains(g)) out.push_back({m, total - m, g});
        }
    return out;
}

Poly rs_monomial(const CoefficientRing& ring, int m, int n)
{
    return ring.var("r").pow(m) * ring.var("s").pow(n);
}

}  // namespace

std::vector<StructureConstant> structure_constants(const AdjointModel& model, const Root& a, const Root& b)
{
    const RootSystem& rs = model.rs();
    rs.index(a);
    rs.index(b);
    if (a == b || a == -b) throw std::invalid_argument("structure_constants needs a != +-b");
    if (!rs.contains(a + b)) return {};
    CoefficientRing ring = symbolic_ring();
    Poly r = ring.var("r"), s = ring.var("s");
    ModelMatrix M = model.x(a, r) * model.x(b, s) * model.x(a, -r) * model.x(b, -s);
    std::vector<StructureConstant> out;
    for (const auto& t : commutator_terms(rs, a, b)) {
        Poly c = model.root_coordinate(M, t.root);
        Poly mono = rs_monomial(ring, t.m, t.n);
        if (c.is_zero()) continue;
        if (!c.is_monomial() || c.terms()[0].first != mono.terms()[0].first)
            throw std::logic_error("commutator coefficient is not C r^m s^n");
        out.push_back({t.m, t.n, static_cast<int>(c.terms()[0].second)});
        M = model.x(t.root, -c) * M;
    }
    if (!M.is_identity()) throw std::logic_error("commutator not exhausted by root factors");
    return out;
}

StructureConstantTable::StructureConstantTable(const AdjointModel& model)
{
    const auto& roots = model.rs().roots();
    for (const auto& a : roots)
        for (const auto& b : roots)
            if (a != b && a != -b && model.rs().contains(a + b)) table_[{a.c, b.c}] = structure_constants(model, a, b);
}

const std::vector<StructureConstant>& StructureConstantTable::get(const Root& a, const Root& b) const
{
    auto it = table_.find({a.c, b.c});
    return it == table_.end() ? empty_ : it->second;
}

CheckReport check_commutator(const GroupModel& model, const std::vector<StructureConstant>& constants,
                             const Root& a, const Root& b, std::int64_t modulus)
{
    CoefficientRing ring = symbolic_ring(modulus);
    Poly r = ring.var("r"), s = ring.var("s");
    ModelMatrix lhs = model.x(a, r) * model.x(b, s) * model.x(a, -r) * model.x(b, -s);
    ModelMatrix rhs = ModelMatrix::identity(model.dim(), modulus);
    for (const auto& c : constants) {
        Root g = a.scaled(c.m) + b.scaled(c.n);
        rhs = rhs * model.x(g, rs_monomial(ring, c.m, c.n).scaled(c.C));
    }
    CheckReport rep;
    rep.equal = lhs == rhs;
    if (!rep.equal) {
        rep.diffs = lhs.diff(rhs, ring);
        rep.detail = "commutator formula fails for " + a.str() + "," + b.str();
    }
    return rep;
}

CheckReport check_torus_conjugation(const GroupModel& model, const Root& a, const Root& b, std::int64_t modulus)
{
    CoefficientRing ring = symbolic_ring(modulus);
    Poly r = ring.var("r"), u = ring.var("u");
    ModelMatrix lhs = model.h(b, u) * model.x(a, r) * model.h_inv(b, u);
    ModelMatrix rhs = model.x(a, u.unit_pow(model.rs().cartan_int(a, b)) * r);
    CheckReport rep;
    rep.equal = lhs == rhs;
    if (!rep.equal) {
        rep.diffs = lhs.diff(rhs, ring);
        rep.detail = "torus conjugation fails for " + a.str() + "," + b.str();
    }
    return rep;
}

WeylReport check_weyl_conjugation(const GroupModel& model, const Root& a, const Root& b, std::int64_t modulus)
{
    CoefficientRing ring = symbolic_ring(modulus);
    Poly s = ring.var("s");
    Poly one = ring.one();
    ModelMatrix w = model.w(a, modulus);
    ModelMatrix winv = model.x(a, -one) * model.x(-a, one) * model.x(a, -one);
    ModelMatrix conj = w * model.x(b, s) * winv;
    Root target = model.rs().reflect(a, b);
    WeylReport rep;
    Poly c = model.root_coordinate(conj, target);
    if (c == s) rep.sign = 1;
    else if (c == -s) rep.sign = -1;
    ModelMatrix rhs = model.x(target, s.scaled(rep.sign == 0 ? 1 : rep.sign));
    rep.equal = rep.sign != 0 && conj == rhs;
    if (!rep.equal) {
        rep.diffs = conj.diff(rhs, ring);
        rep.detail = "Weyl conjugation fails for " + a.str() + "," + b.str();
    }
    return rep;
}

}  // namespace chev
