#include "chev/ringspec.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace chev {

std::string to_string(Tri t)
{
    switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    default: return "unknown";
    }
}

Tri parse_tri(const std::string& s)
{
    if (s == "yes") return Tri::yes;
    if (s == "no") return Tri::no;
    if (s == "unknown") return Tri::unknown;
    throw std::invalid_argument("expected yes/no/unknown, got '" + s + "'");
}

bool RingSpec::is_invertible(std::int64_t prime) const
{
    if (characteristic > 0) return prime % characteristic != 0;
    return invertible_primes.count(prime) != 0;
}

void RingSpec::validate() const
{
    if (t0.empty()) throw std::invalid_argument("ring " + name + ": T0 must contain x0 = 1");
    if (has_model && !t0[0].value.is_one()) throw std::invalid_argument("ring " + name + ": x0 must be 1");
    if (borel2_fp == Tri::yes && parabolics_fg != Tri::yes)
        throw std::invalid_argument("ring " + name + ": borel2_fp = yes needs parabolics_fg = yes");
    if (arithmetic && arithmetic->global_char != characteristic)
        throw std::invalid_argument("ring " + name + ": arithmetic data disagrees with the characteristic");
    if (arithmetic && arithmetic->S_size < 1) throw std::invalid_argument("ring " + name + ": |S| must be >= 1");
    for (const auto& g : units)
        if (g.order < 0 || g.order == 1) throw std::invalid_argument("ring " + name + ": bad unit order");
}

namespace {

bool is_prime(std::int64_t p)
{
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t primitive_root(std::int64_t p)
{
    for (std::int64_t g = 2; g < p; ++g) {
        std::int64_t x = 1;
        int ord = 0;
        do {
            x = x * g % p;
            ++ord;
        } while (x != 1);
        if (ord == p - 1) return g;
    }
    return 1;
}

RingSpec base_ring(const std::string& name, std::int64_t ch)
{
    RingSpec r;
    r.name = name;
    r.characteristic = ch;
    r.model.modulus = ch;
    r.t0.push_back({"1", Poly::constant(1, ch)});
    return r;
}

constexpr std::int64_t half_model_prime = 2147483647;

UnitElement shifted(std::size_t rank, std::size_t i, int e)
{
    UnitElement u{std::vector<int>(rank, 0)};
    if (i < rank) u.e[i] = e;
    return u;
}

}  // namespace

std::vector<std::string> ring_preset_names()
{
    return {"Z", "Z_laurent", "Z_half", "Fq_poly", "Fq_laurent", "O_S"};
}

RingSpec ring_preset(const std::string& name, std::int64_t characteristic, int S_size)
{
    std::smatch m;
    if (name == "Z" || name == "Z_laurent" || name == "Z_half") {
        RingSpec r = base_ring(name, 0);
        // Z[1/2] is modelled inside F_P, P = 2^31 - 1, which it embeds into
        // on every element of small height.
        if (name == "Z_half") {
            r.model.modulus = half_model_prime;
            r.t0[0].value = Poly::constant(1, half_model_prime);
        }
        const std::int64_t mm = r.model.modulus;
        r.units.push_back({"-1", 2, Poly::constant(-1, mm)});
        r.parabolics_fg = Tri::yes;
        if (name == "Z") {
            r.borel2_fp = Tri::yes;
            r.arithmetic = Arithmetic{0, 1};
        } else if (name == "Z_laurent") {
            r.model.add_var("t", true);
            r.units.push_back({"t", 0, r.model.var("t")});
            r.borel2_fp = Tri::no;
            r.facts["levi_fp:A11:1,5,1,5"] = Tri::yes;
        } else {
            r.units.push_back({"2", 0, Poly::constant(2, mm)});
            r.invertible_primes.insert(2);
            r.borel2_fp = Tri::yes;
            r.arithmetic = Arithmetic{0, 2};
        }
        const std::size_t k = r.units.size();
        r.additive_relators.push_back({{1, shifted(k, 0, 1), 0}, {1, shifted(k, k, 0), 0}});
        if (name == "Z_half") r.additive_relators.push_back({{1, shifted(k, 1, 1), 0}, {-2, shifted(k, k, 0), 0}});
        r.validate();
        return r;
    }
    if (std::regex_match(name, m, std::regex("F(q|[0-9]+)_(poly|laurent)"))) {
        std::int64_t q = m[1] == "q" ? (characteristic ? characteristic : 5) : std::stoll(m[1]);
        if (!is_prime(q)) throw std::invalid_argument("only prime fields are supported, got q = " + std::to_string(q));
        bool laurent = m[2] == "laurent";
        RingSpec r = base_ring("F" + std::to_string(q) + (laurent ? "_laurent" : "_poly"), q);
        std::int64_t g = primitive_root(q);
        if (q > 2) r.units.push_back({std::to_string(g), static_cast<int>(q - 1), Poly::constant(g, q)});
        if (laurent) {
            r.model.add_var("t", true);
            r.units.push_back({"t", 0, r.model.var("t")});
            r.parabolics_fg = Tri::yes;
            r.borel2_fp = Tri::no;
            r.arithmetic = Arithmetic{q, 2};
        } else {
            r.model.add_var("t", false);
            r.parabolics_fg = Tri::no;
            r.borel2_fp = Tri::no;
            r.arithmetic = Arithmetic{q, 1};
        }
        const std::size_t k = r.units.size();
        if (q > 2) r.additive_relators.push_back({{1, shifted(k, 0, 1), 0}, {-g, shifted(k, k, 0), 0}});
        r.additive_relators.push_back({{q, shifted(k, k, 0), 0}});
        r.validate();
        return r;
    }
    if (name == "O_S") {
        if (characteristic != 0 && !is_prime(characteristic))
            throw std::invalid_argument("O_S characteristic must be 0 or prime");
        RingSpec r = base_ring("O_S", characteristic);
        r.has_model = false;
        r.arithmetic = Arithmetic{characteristic, S_size};
        if (characteristic == 0) {
            r.parabolics_fg = Tri::yes;
            r.borel2_fp = Tri::yes;
        } else {
            r.parabolics_fg = S_size > 1 ? Tri::yes : Tri::no;
            r.borel2_fp = S_size >= 3 ? Tri::yes : Tri::no;
        }
        r.validate();
        return r;
    }
    throw std::invalid_argument("unknown ring preset '" + name + "'");
}

UnitElement unit_one(const RingSpec& ring)
{
    return UnitElement{std::vector<int>(ring.rank(), 0)};
}

UnitElement unit_generator(const RingSpec& ring, std::size_t i, int power)
{
    return unit_canonical(ring, shifted(ring.rank(), i, power));
}

UnitElement unit_canonical(const RingSpec& ring, UnitElement u)
{
    if (u.e.size() != ring.rank()) throw std::invalid_argument("unit element has wrong length");
    for (std::size_t i = 0; i < ring.rank(); ++i) {
        int o = ring.units[i].order;
        if (o) u.e[i] = ((u.e[i] % o) + o) % o;
    }
    return u;
}

UnitElement unit_mul(const RingSpec& ring, const UnitElement& a, const UnitElement& b)
{
    UnitElement r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e.at(i);
    return unit_canonical(ring, r);
}

UnitElement unit_pow(const RingSpec& ring, const UnitElement& a, int k)
{
    UnitElement r = a;
    for (auto& x : r.e) x *= k;
    return unit_canonical(ring, r);
}

Poly unit_value(const RingSpec& ring, const UnitElement& u)
{
    if (!ring.has_model) throw std::invalid_argument("ring " + ring.name + " has no concrete model");
    Poly v = Poly::constant(1, ring.model.modulus);
    for (std::size_t i = 0; i < ring.rank(); ++i)
        if (u.e[i]) v = v * ring.units[i].value.unit_pow(u.e[i]);
    return v;
}

namespace {

// Representative of a torsion exponent closest to zero.
int symmetric(int e, int o)
{
    if (!o) return e;
    e = ((e % o) + o) % o;
    return e > o / 2 ? e - o : e;
}

}  // namespace

bool unit_in_box(const RingSpec& ring, const UnitElement& u, int c)
{
    for (std::size_t i = 0; i < ring.rank(); ++i) {
        int o = ring.units[i].order;
        if (std::abs(symmetric(u.e[i], o)) > c) return false;
    }
    return true;
}

std::vector<UnitElement> unit_box(const RingSpec& ring, int c)
{
    std::vector<UnitElement> out{unit_one(ring)};
    for (std::size_t i = 0; i < ring.rank(); ++i) {
        int o = ring.units[i].order;
        std::vector<int> vals;
        if (o) {
            for (int e = 0; e < o; ++e)
                if (std::abs(symmetric(e, o)) <= c) vals.push_back(e);
        } else {
            for (int e = -c; e <= c; ++e) vals.push_back(e);
        }
        std::vector<UnitElement> next;
        for (const auto& u : out)
            for (int e : vals) {
                UnitElement v = u;
                v.e[i] = e;
                next.push_back(v);
            }
        out = std::move(next);
    }
    auto weight = [&](const UnitElement& u) {
        int w = 0;
        for (std::size_t i = 0; i < ring.rank(); ++i) w += std::abs(symmetric(u.e[i], ring.units[i].order));
        return w;
    };
    std::stable_sort(out.begin(), out.end(),
                     [&](const UnitElement& a, const UnitElement& b) { return weight(a) < weight(b); });
    return out;
}

std::optional<UnitElement> integer_as_unit(const RingSpec& ring, std::int64_t value, int c)
{
    Poly target = Poly::constant(value, ring.model.modulus);
    for (const auto& u : unit_box(ring, c))
        if (unit_value(ring, u) == target) return u;
    return std::nullopt;
}

std::string unit_str(const RingSpec& ring, const UnitElement& u)
{
    std::string s;
    for (std::size_t i = 0; i < ring.rank(); ++i) {
        if (u.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "(" + ring.units[i].name + ")";
        if (u.e[i] != 1) s += "^" + std::to_string(u.e[i]);
    }
    return s.empty() ? "1" : s;
}

UnitDecomposition unit_decompose(const RingSpec& ring, const UnitElement& v0, int c)
{
    if (c < 1) throw std::invalid_argument("unit_decompose needs c >= 1");
    UnitElement v = unit_canonical(ring, v0);
    const std::size_t k = ring.rank();
    std::vector<int> half(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        int o = ring.units[i].order;
        int e = v.e[i];
        if (o && (o <= 2 * c + 1 || std::abs(symmetric(e, o)) <= c)) continue;
        int kk = e >= 0 ? e / 2 : -((-e + 1) / 2);
        half[i] = kk;
    }
    int g = 0;
    for (int x : half) g = std::gcd(g, std::abs(x));
    UnitDecomposition d;
    d.w = unit_one(ring);
    d.k = g;
    if (g) {
        for (std::size_t i = 0; i < k; ++i) d.w.e[i] = half[i] / g;
        d.w = unit_canonical(ring, d.w);
    }
    d.u = unit_mul(ring, v, unit_pow(ring, d.w, -2 * d.k));
    if (!unit_in_box(ring, d.u, c)) throw std::logic_error("unit decomposition left the box");
    return d;
}

UnitElement unit_recombine(const RingSpec& ring, const UnitDecomposition& d)
{
    return unit_mul(ring, unit_pow(ring, d.w, 2 * d.k), d.u);
}

FormalRingElement formal_from_unit(const RingSpec& ring, const UnitElement& u, int x, int c, std::int64_t a)
{
    UnitDecomposition d = unit_decompose(ring, u, c);
    return FormalRingElement{{FormalTerm{a, d.w, d.k, d.u, x}}};
}

Poly formal_value(const RingSpec& ring, const FormalRingElement& r)
{
    Poly v(ring.model.modulus);
    for (const auto& t : r.terms) {
        UnitElement unit = unit_recombine(ring, {t.w, t.k, t.u});
        v += (unit_value(ring, unit) * ring.t0.at(static_cast<std::size_t>(t.x)).value).scaled(t.a);
    }
    return v;
}

namespace {

std::vector<UnitTerm> base_product(const RingSpec& ring, int i, int j, int m, int n)
{
    auto it = ring.product_table.find({i, j, m, n});
    if (it != ring.product_table.end()) return it->second;
    if (i == 0 && j == 0) return {UnitTerm{1, unit_one(ring), 0}};
    throw std::invalid_argument("ring " + ring.name + " has no product table entry for (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(m) + "," + std::to_string(n) + ")");
}

std::int64_t ipow(std::int64_t a, int e)
{
    std::int64_t r = 1;
    while (e-- > 0) r = mul_checked(r, a);
    return r;
}

}  // namespace

FormalRingElement product_expr(const RingSpec& ring, const FormalRingElement& r, const FormalRingElement& s, int m,
                               int n, int c)
{
    if (m < 1 || n < 1) throw std::invalid_argument("product_expr needs m, n >= 1");
    if ((r.terms.size() > 1 && m > 1) || (s.terms.size() > 1 && n > 1))
        throw std::invalid_argument("powers of multi-term ring elements have no fixed expression");
    FormalRingElement out;
    for (const auto& tr : r.terms)
        for (const auto& ts : s.terms) {
            UnitElement ur = unit_pow(ring, unit_recombine(ring, {tr.w, tr.k, tr.u}), m);
            UnitElement us = unit_pow(ring, unit_recombine(ring, {ts.w, ts.k, ts.u}), n);
            std::int64_t coeff = mul_checked(ipow(tr.a, m), ipow(ts.a, n));
            for (const auto& b : base_product(ring, tr.x, ts.x, m, n)) {
                UnitElement v = unit_mul(ring, unit_mul(ring, ur, us), b.unit);
                UnitDecomposition d = unit_decompose(ring, v, c);
                out.terms.push_back({mul_checked(coeff, b.a), d.w, d.k, d.u, b.x});
            }
        }
    return out;
}

bool nvb(const RingSpec& ring, const RootSystemType& t)
{
    switch (t.family) {
    case 'B':
    case 'C':
    case 'F': return ring.is_invertible(2);
    case 'G': return ring.is_invertible(2) && ring.is_invertible(3);
    default: return true;
    }
}

Tri qg(const RingSpec& ring, const RootSystemType& t)
{
    if (ring.borel2_fp == Tri::yes || nvb(ring, t)) return Tri::yes;
    return ring.borel2_fp == Tri::unknown ? Tri::unknown : Tri::no;
}

ToralPair toral_pair(const RootSystem& rs, const Root& a, const Root& b)
{
    rs.index(a);
    rs.index(b);
    if (a == b || a == -b) throw std::invalid_argument("toral_pair needs a != +-b");
    std::optional<ToralPair> best;
    auto offer = [&](ToralPair t) {
        if (t.n != 0 && (!best || std::abs(t.n) < std::abs(best->n))) best = t;
    };
    const int ab = rs.cartan_int(a, b), ba = rs.cartan_int(b, a);
    if (ab == 0) offer({"orthogonal", 2, std::nullopt, 0, 0});
    if (rs.rank() >= 3)
        for (const auto& g : rs.positive_roots())  // -g gives the opposite n
            if (rs.cartan_int(a, g) == 0 && rs.cartan_int(b, g) != 0) offer({"bystander", rs.cartan_int(b, g), g, 0, 0});
    for (int ap = 1; ap <= 12; ++ap)
        for (int p : {ap, -ap})
            for (int aq = 1; aq <= 12; ++aq)
                for (int q : {aq, -aq})
                    if (2 * p - q * ab == 0) offer({"pq", p * ba - 2 * q, std::nullopt, p, q});
    if (!best) throw std::logic_error("no toral construction found");
    return *best;
}

int toral_constant(const RootSystem& rs)
{
    if (rs.rank() == 1) return 2;
    int c = 0;
    for (const auto& a : rs.roots())
        for (const auto& b : rs.roots())
            if (a != b && a != -b) c = std::max(c, std::abs(toral_pair(rs, a, b).n));
    return c;
}

}  // namespace chev
