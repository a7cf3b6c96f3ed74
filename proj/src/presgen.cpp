#include "chev/presgen.hpp"

#include <algorithm>
#include <set>

namespace chev {

Word::Word(std::vector<Letter> letters)
{
    for (auto& l : letters) {
        if (l.exp == 0) continue;
        if (!letters_.empty() && letters_.back().sym == l.sym) {
            letters_.back().exp += l.exp;
            if (letters_.back().exp == 0) letters_.pop_back();
        } else {
            letters_.push_back(std::move(l));
        }
    }
}

Word Word::single(const GenSymbol& s, int exp)
{
    return Word({Letter{s, exp}});
}

Word Word::inverse() const
{
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out) l.exp = -l.exp;
    return Word(std::move(out));
}

Word Word::operator*(const Word& o) const
{
    std::vector<Letter> all = letters_;
    all.insert(all.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(all));
}

Word& Word::operator*=(const Word& o)
{
    *this = *this * o;
    return *this;
}

Word Word::pow(int k) const
{
    Word base = k < 0 ? inverse() : *this;
    Word out;
    for (int i = 0; i < std::abs(k); ++i) out *= base;
    return out;
}

Word commutator(const Word& a, const Word& b)
{
    return a * b * a.inverse() * b.inverse();
}

std::pair<Word, Word> commutator_expand_factors(const Word& w1, const Word& w2)
{
    if (w1.empty()) return {commutator(w1, w2), Word()};
    Word a({w1.letters().front()});
    Word b(std::vector<Letter>(w1.letters().begin() + 1, w1.letters().end()));
    return {a * commutator(b, w2) * a.inverse(), commutator(a, w2)};
}

Word commutator_expand(const Word& w1, const Word& w2)
{
    auto [f1, f2] = commutator_expand_factors(w1, w2);
    return f1 * f2;
}

void Presentation::add(Word w, const std::string& family, int level)
{
    if (w.empty()) return;
    relators.push_back(std::move(w));
    families.push_back(family);
    levels.push_back(level);
}

std::map<std::string, std::size_t> Presentation::family_counts() const
{
    std::map<std::string, std::size_t> out;
    for (const auto& f : families) ++out[f];
    return out;
}

BuildContext::BuildContext(std::shared_ptr<const RootSystem> r, RingSpec rg) : rs(std::move(r)), ring(std::move(rg))
{
    if (!ring.has_model) throw Refusal("ring " + ring.name + " has no concrete model to present over");
    cb = ChevalleyBasisData::build(*rs);
    table = std::make_shared<StructureConstantTable>(AdjointModel(cb));
    c = toral_constant(*rs);
    for (const auto& u : unit_box(ring, c))
        for (int i = 0; i < static_cast<int>(ring.t0.size()); ++i) ttilde.emplace_back(u, i);
}

GenSymbol x_symbol(SymKind kind, const Root& root, const UnitElement& u, int t0)
{
    GenSymbol s;
    s.kind = kind;
    s.root = root;
    s.unit = u;
    s.t0 = t0;
    return s;
}

GenSymbol h_symbol(const Root& root, int gen)
{
    GenSymbol s;
    s.kind = SymKind::h;
    s.root = root;
    s.gen = gen;
    return s;
}

Word h_unit_word(const RingSpec& ring, const Root& root, const UnitElement& w, int k)
{
    Word out;
    for (std::size_t j = 0; j < ring.rank(); ++j)
        if (w.e[j] * k != 0) out *= Word::single(h_symbol(root, static_cast<int>(j)), w.e[j] * k);
    return out;
}

Word zeta_word(const BuildContext& ctx, const std::vector<StructureConstant>& constants, const Root& g, const Root& h,
               const std::pair<UnitElement, int>& t1, const std::pair<UnitElement, int>& t2, SymKind kind, bool boxed)
{
    Word out;
    const RingSpec& ring = ctx.ring;
    // Schematic presentations never need a box; a large bound keeps units whole.
    const int c = boxed ? ctx.c : 1 << 12;
    FormalRingElement r = formal_from_unit(ring, t1.first, t1.second, c);
    FormalRingElement s = formal_from_unit(ring, t2.first, t2.second, c);
    for (const auto& sc : constants) {
        if (sc.C == 0) continue;
        Root target = g.scaled(sc.m) + h.scaled(sc.n);
        if (!ctx.rs->contains(target)) throw std::invalid_argument("zeta target is not a root");
        for (const auto& term : product_expr(ring, r, s, sc.m, sc.n, c).terms) {
            std::int64_t e = term.a * sc.C;
            if (boxed) {
                out *= h_unit_word(ring, target, term.w, term.k);
                out *= Word::single(x_symbol(kind, target, term.u, term.x), static_cast<int>(e));
                out *= h_unit_word(ring, target, term.w, -term.k);
            } else {
                UnitElement full = unit_recombine(ring, {term.w, term.k, term.u});
                out *= Word::single(x_symbol(kind, target, full, term.x), static_cast<int>(e));
            }
        }
    }
    return out;
}

Word commutator_relator(const BuildContext& ctx, const std::vector<StructureConstant>& constants, SymKind kg,
                        const Root& g, const std::pair<UnitElement, int>& t1, SymKind kh, const Root& h,
                        const std::pair<UnitElement, int>& t2, SymKind target, bool boxed)
{
    Word lhs = commutator(Word::single(x_symbol(kg, g, t1.first, t1.second)),
                          Word::single(x_symbol(kh, h, t2.first, t2.second)));
    return lhs * zeta_word(ctx, constants, g, h, t1, t2, target, boxed).inverse();
}

namespace {

int symmetric_rep(int e, int o)
{
    e = ((e % o) + o) % o;
    return e > o / 2 ? e - o : e;
}

}  // namespace

std::optional<std::pair<int, UnitElement>> torus_shift(const RingSpec& ring, int c, const UnitElement& u, int gen,
                                                      int E, int d)
{
    const int o = ring.units.at(static_cast<std::size_t>(gen)).order;
    UnitElement out = u;
    int k = 0;
    const int total = u.e[static_cast<std::size_t>(gen)] + E;
    if (d == 0) {
        out.e[static_cast<std::size_t>(gen)] = total;
    } else if (o == 0) {
        int k0 = total >= 0 ? total / d : -((-total + std::abs(d) - 1) / std::abs(d));
        if (d < 0) k0 = -(total >= 0 ? (total + std::abs(d) - 1) / std::abs(d) : (-total) / std::abs(d));
        int best = k0;
        for (int cand : {k0 - 1, k0, k0 + 1}) {
            int rb = std::abs(total - best * d), rc = std::abs(total - cand * d);
            if (rc < rb || (rc == rb && (std::abs(cand) < std::abs(best) || (std::abs(cand) == std::abs(best) && cand < best))))
                best = cand;
        }
        k = best;
        out.e[static_cast<std::size_t>(gen)] = total - k * d;
    } else {
        int best = 0;
        for (int cand = 1; cand < o; ++cand)
            if (std::abs(symmetric_rep(total - cand * d, o)) < std::abs(symmetric_rep(total - best * d, o))) best = cand;
        k = best;
        out.e[static_cast<std::size_t>(gen)] = total - k * d;
    }
    out = unit_canonical(ring, out);
    if (!unit_in_box(ring, out, c)) return std::nullopt;
    return std::make_pair(k, out);
}

std::vector<std::pair<UnitElement, int>> truncated_T(const RingSpec& ring, const Truncation& tr)
{
    std::vector<std::pair<UnitElement, int>> out;
    for (const auto& u : unit_box(ring, tr.max_exponent))
        for (int i = 0; i < static_cast<int>(ring.t0.size()); ++i) {
            if (static_cast<int>(out.size()) >= tr.max_T) return out;
            out.emplace_back(u, i);
        }
    return out;
}

namespace {

std::vector<Root> roots_in(const RootSystem& rs, const std::vector<Root>& v)
{
    std::vector<Root> out = v;
    std::sort(out.begin(), out.end(), [&](const Root& a, const Root& b) { return rs.precedes(a, b); });
    return out;
}

bool has_root(const std::vector<Root>& v, const Root& r)
{
    return std::find(v.begin(), v.end(), r) != v.end();
}

void collect_generators(Presentation& p)
{
    std::set<GenSymbol> seen(p.generators.begin(), p.generators.end());
    for (const auto& w : p.relators)
        for (const auto& l : w.letters())
            if (seen.insert(l.sym).second) p.generators.push_back(l.sym);
}

Presentation schematic(const ParabolicSpec& spec, const RingSpec& ring, const Truncation& tr,
                       const std::vector<Root>& roots, const std::string& kind, bool graded)
{
    BuildContext ctx(spec.rs, ring);
    const RootSystem& rs = *spec.rs;
    Presentation p;
    p.kind = kind;
    p.type = rs.type();
    p.I = spec.I;
    p.ring = ring.name;
    p.c = ctx.c;
    p.finite = false;
    p.metadata["truncation.max_T"] = std::to_string(tr.max_T);
    p.metadata["truncation.max_exponent"] = std::to_string(tr.max_exponent);
    auto T = truncated_T(ring, tr);
    p.metadata["truncation.T_size"] = std::to_string(T.size());
    for (const auto& g : roots)
        for (const auto& t : T) p.generators.push_back(x_symbol(SymKind::x, g, t.first, t.second));
    for (const auto& g : roots)
        for (const auto& h : roots) {
            if (g == -h) continue;
            const auto& constants = g == h ? std::vector<StructureConstant>{} : ctx.table->get(g, h);
            int level = graded ? alvl(spec, g) + alvl(spec, h) : -1;
            for (const auto& t1 : T)
                for (const auto& t2 : T)
                    p.add(commutator_relator(ctx, constants, SymKind::x, g, t1, SymKind::x, h, t2, SymKind::x, false),
                          "unipotent-commutator", level);
        }
    std::vector<UnitElement> units;
    for (const auto& t : T)
        if (std::find(units.begin(), units.end(), t.first) == units.end()) units.push_back(t.first);
    std::set<std::pair<UnitElement, int>> in_T(T.begin(), T.end());
    for (const auto& g : roots)
        for (const auto& pattern : ring.additive_relators)
            for (const auto& u : units) {
                Word w;
                bool ok = true;
                for (const auto& term : pattern) {
                    UnitElement v = unit_mul(ring, u, term.unit);
                    if (!in_T.count({v, term.x})) ok = false;
                    w *= Word::single(x_symbol(SymKind::x, g, v, term.x), static_cast<int>(term.a));
                }
                if (ok) p.add(w, "additive");
            }
    collect_generators(p);
    return p;
}

// Torus relators: commuting generators, torsion orders, and h_a(v) written
// through the simple coroots.
void add_torus_relators(Presentation& p, const RootSystem& rs, const RingSpec& ring)
{
    std::vector<GenSymbol> hs;
    for (const auto& a : rs.roots())
        for (int j = 0; j < static_cast<int>(ring.rank()); ++j) hs.push_back(h_symbol(a, j));
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t k = i + 1; k < hs.size(); ++k)
            p.add(commutator(Word::single(hs[i]), Word::single(hs[k])), "torus");
    for (const auto& h : hs) {
        int o = ring.units[static_cast<std::size_t>(h.gen)].order;
        if (o) p.add(Word::single(h, o), "torus");
    }
    for (const auto& a : rs.roots()) {
        if (rs.simple_index(a) >= 0) continue;
        auto co = rs.coroot_coords(a);
        for (int j = 0; j < static_cast<int>(ring.rank()); ++j) {
            Word rhs;
            for (int i = 0; i < rs.rank(); ++i)
                if (co[i]) rhs *= Word::single(h_symbol(rs.simple(i), j), co[i]);
            p.add(Word::single(h_symbol(a, j)) * rhs.inverse(), "torus");
        }
    }
}

void add_h_generators(Presentation& p, const RootSystem& rs, const RingSpec& ring)
{
    for (const auto& a : rs.roots())
        for (int j = 0; j < static_cast<int>(ring.rank()); ++j) p.generators.push_back(h_symbol(a, j));
}

void add_x_generators(Presentation& p, const BuildContext& ctx, const std::vector<Root>& roots, SymKind kind)
{
    for (const auto& g : roots)
        for (const auto& t : ctx.ttilde) p.generators.push_back(x_symbol(kind, g, t.first, t.second));
}

// Relators of the rank-one group X_g semidirect the torus: commutation
// inside X_g, additive relators, and the action of h_g.
void add_root_block(Presentation& p, const BuildContext& ctx, const Root& g, SymKind kind, const std::string& family)
{
    const RingSpec& ring = ctx.ring;
    const auto& T = ctx.ttilde;
    for (std::size_t i = 0; i < T.size(); ++i)
        for (std::size_t j = i + 1; j < T.size(); ++j)
            p.add(commutator(Word::single(x_symbol(kind, g, T[i].first, T[i].second)),
                             Word::single(x_symbol(kind, g, T[j].first, T[j].second))),
                  family);
    for (const auto& pattern : ring.additive_relators)
        for (const auto& u : unit_box(ring, ctx.c)) {
            Word w;
            bool ok = true;
            for (const auto& term : pattern) {
                UnitElement v = unit_mul(ring, u, term.unit);
                if (!unit_in_box(ring, v, ctx.c)) ok = false;
                w *= Word::single(x_symbol(kind, g, v, term.x), static_cast<int>(term.a));
            }
            if (ok) p.add(w, family);
        }
    for (int j = 0; j < static_cast<int>(ring.rank()); ++j)
        for (const auto& t : T) {
            UnitElement v = unit_mul(ring, t.first, unit_generator(ring, static_cast<std::size_t>(j), 2));
            if (!unit_in_box(ring, v, ctx.c)) continue;
            Word hw = Word::single(h_symbol(g, j));
            p.add(hw * Word::single(x_symbol(kind, g, t.first, t.second)) * hw.inverse() *
                      Word::single(x_symbol(kind, g, v, t.second)).inverse(),
                  family);
        }
}

// h_a(v) X_g(u x) h_a(v)^-1 = h_b(v)^k X_g(u' x) h_b(v)^-k over all a, b in Phi.
void add_torus_conjugation(Presentation& p, const BuildContext& ctx, const std::vector<Root>& targets, SymKind kind,
                           const std::string& family)
{
    const RootSystem& rs = *ctx.rs;
    const RingSpec& ring = ctx.ring;
    for (const auto& g : targets)
        for (const auto& a : rs.roots())
            for (const auto& b : rs.roots())
                for (int j = 0; j < static_cast<int>(ring.rank()); ++j)
                    for (const auto& t : ctx.ttilde) {
                        auto shift = torus_shift(ring, ctx.c, t.first, j, rs.cartan_int(g, a), rs.cartan_int(g, b));
                        if (!shift) continue;
                        Word ha = Word::single(h_symbol(a, j));
                        Word hb = Word::single(h_symbol(b, j), shift->first);
                        Word lhs = ha * Word::single(x_symbol(kind, g, t.first, t.second)) * ha.inverse();
                        Word rhs = hb * Word::single(x_symbol(kind, g, shift->second, t.second)) * hb.inverse();
                        p.add(lhs * rhs.inverse(), family);
                    }
}

// Sound relators of the extended Levi factor, standing in for a supplied
// finite presentation.
void add_levi_stub(Presentation& p, const BuildContext& ctx, const std::vector<Root>& le)
{
    const RootSystem& rs = *ctx.rs;
    const RingSpec& ring = ctx.ring;
    add_torus_relators(p, rs, ring);
    for (const auto& g : le)
        for (const auto& a : rs.roots())
            for (int j = 0; j < static_cast<int>(ring.rank()); ++j)
                for (const auto& t : ctx.ttilde) {
                    auto shift = torus_shift(ring, ctx.c, t.first, j, rs.cartan_int(g, a), 0);
                    if (!shift) continue;
                    Word ha = Word::single(h_symbol(a, j));
                    p.add(ha * Word::single(x_symbol(SymKind::x, g, t.first, t.second)) * ha.inverse() *
                              Word::single(x_symbol(SymKind::x, g, shift->second, t.second)).inverse(),
                          "levi-block");
                }
    for (const auto& g : le)
        for (const auto& h : le) {
            if (g == -h) continue;
            bool closed = true;
            const auto& constants = g == h ? std::vector<StructureConstant>{} : ctx.table->get(g, h);
            for (const auto& sc : constants)
                if (!has_root(le, g.scaled(sc.m) + h.scaled(sc.n))) closed = false;
            if (!closed) continue;
            for (const auto& t1 : ctx.ttilde)
                for (const auto& t2 : ctx.ttilde)
                    p.add(commutator_relator(ctx, constants, SymKind::x, g, t1, SymKind::x, h, t2, SymKind::x, true),
                          "levi-block");
        }
    for (const auto& g : le)
        for (const auto& pattern : ring.additive_relators)
            for (const auto& u : unit_box(ring, ctx.c)) {
                Word w;
                bool ok = true;
                for (const auto& term : pattern) {
                    UnitElement v = unit_mul(ring, u, term.unit);
                    if (!unit_in_box(ring, v, ctx.c)) ok = false;
                    w *= Word::single(x_symbol(SymKind::x, g, v, term.x), static_cast<int>(term.a));
                }
                if (ok) p.add(w, "levi-block");
            }
}

Presentation parabolic_common(const ParabolicSpec& spec, const RingSpec& ring, const std::string& kind,
                              BuildContext& ctx, ParabolicProfile& prof)
{
    if (spec.is_borel()) throw std::invalid_argument("parabolic presentations need I non-empty");
    prof = profile(spec);
    Presentation p;
    p.kind = kind;
    p.type = spec.rs->type();
    p.I = spec.I;
    p.ring = ring.name;
    p.c = ctx.c;
    p.finite = true;
    p.metadata["levi_block"] = "stub";
    add_h_generators(p, *spec.rs, ring);
    add_x_generators(p, ctx, prof.le_roots, SymKind::x);
    add_x_generators(p, ctx, roots_in(*spec.rs, prof.kernel_roots), SymKind::xt);
    add_levi_stub(p, ctx, prof.le_roots);
    return p;
}

void add_kernel_families(Presentation& p, const BuildContext& ctx, const ParabolicSpec& spec,
                         const ParabolicProfile& prof)
{
    const auto kernel = roots_in(*spec.rs, prof.kernel_roots);
    add_torus_conjugation(p, ctx, kernel, SymKind::xt, "torus-conjugation");
    for (const auto& a : prof.le_roots)
        for (const auto& g : kernel) {
            const auto& constants = ctx.table->get(a, g);
            for (const auto& t1 : ctx.ttilde)
                for (const auto& t2 : ctx.ttilde)
                    p.add(commutator_relator(ctx, constants, SymKind::x, a, t1, SymKind::xt, g, t2, SymKind::xt, true),
                          "levi-kernel-commutator", alvl(spec, g));
        }
    for (const auto& g : kernel)
        for (const auto& h : kernel) {
            const auto& constants = g == h ? std::vector<StructureConstant>{} : ctx.table->get(g, h);
            for (const auto& t1 : ctx.ttilde)
                for (const auto& t2 : ctx.ttilde)
                    p.add(commutator_relator(ctx, constants, SymKind::xt, g, t1, SymKind::xt, h, t2, SymKind::xt, true),
                          "kernel-commutator", alvl(spec, g) + alvl(spec, h));
        }
}

}  // namespace

Presentation present_unipotent(const ParabolicSpec& spec, const RingSpec& ring, const Truncation& tr)
{
    ParabolicProfile prof = profile(spec);
    return schematic(spec, ring, tr, roots_in(*spec.rs, prof.unipotent_roots), "unipotent", false);
}

Presentation present_kernel(const ParabolicSpec& spec, const RingSpec& ring, const Truncation& tr)
{
    if (spec.is_borel()) throw std::invalid_argument("present_kernel needs I non-empty; use present_unipotent");
    ParabolicProfile prof = profile(spec);
    return schematic(spec, ring, tr, roots_in(*spec.rs, prof.kernel_roots), "kernel", true);
}

Presentation present_borel_finite(const std::shared_ptr<const RootSystem>& rs, const RingSpec& ring,
                                  const std::map<std::vector<int>, Presentation>& per_root)
{
    if (ring.borel2_fp != Tri::yes && per_root.empty())
        throw Refusal("ring " + ring.name + " has no finite presentation of the rank-one Borel and none was supplied");
    BuildContext ctx(rs, ring);
    Presentation p;
    p.kind = "borel";
    p.type = rs->type();
    p.ring = ring.name;
    p.c = ctx.c;
    p.finite = true;
    const auto pos = rs->positive_roots();
    add_h_generators(p, *rs, ring);
    add_x_generators(p, ctx, pos, SymKind::xt);
    add_torus_relators(p, *rs, ring);
    for (const auto& g : pos) {
        auto it = per_root.find(g.c);
        if (it != per_root.end()) {
            for (const auto& w : it->second.relators) p.add(w, "root-block");
        } else {
            add_root_block(p, ctx, g, SymKind::xt, "root-block");
        }
        auto route = rs->weyl_route_to_simple(g);
        std::string r;
        for (const auto& s : route.first) r += (r.empty() ? "" : " ") + std::to_string(rs->simple_index(s) + 1);
        p.metadata["route." + g.str()] = r.empty() ? "-" : r;
    }
    // With a single positive root the Borel is the rank-one block itself.
    if (pos.size() > 1) {
        add_torus_conjugation(p, ctx, pos, SymKind::xt, "borel-torus-conjugation");
        for (const auto& g : pos)
            for (const auto& h : pos) {
                if (g == h) continue;
                const auto& constants = ctx.table->get(g, h);
                for (const auto& t1 : ctx.ttilde)
                    for (const auto& t2 : ctx.ttilde)
                        p.add(commutator_relator(ctx, constants, SymKind::xt, g, t1, SymKind::xt, h, t2, SymKind::xt,
                                                 true),
                              "borel-commutator");
            }
    }
    return p;
}

bool is_g2_long_exception(const ParabolicSpec& spec)
{
    const RootSystem& rs = *spec.rs;
    return rs.type().family == 'G' && spec.I.size() == 1 && rs.is_long(rs.simple(spec.I[0]));
}

Presentation present_parabolic_case1(const ParabolicSpec& spec, const RingSpec& ring)
{
    if (ring.borel2_fp != Tri::yes) throw Refusal("ring " + ring.name + ": the rank-one Borel is not known to be finitely presented");
    BuildContext ctx(spec.rs, ring);
    ParabolicProfile prof;
    Presentation p = parabolic_common(spec, ring, "case1", ctx, prof);
    for (const auto& g : roots_in(*spec.rs, prof.kernel_roots)) add_root_block(p, ctx, g, SymKind::xt, "root-block");
    add_kernel_families(p, ctx, spec, prof);
    return p;
}

Presentation present_parabolic_nvb(const ParabolicSpec& spec, const RingSpec& ring)
{
    if (!nvb(ring, spec.rs->type())) throw Refusal("ring " + ring.name + " is not NVB for " + spec.rs->type().name());
    if (is_g2_long_exception(spec))
        throw Refusal("G2 with I a single long root is excluded: the extra commutator terms are not known to vanish");
    BuildContext ctx(spec.rs, ring);
    ParabolicProfile prof;
    Presentation p = parabolic_common(spec, ring, "nvb", ctx, prof);
    add_kernel_families(p, ctx, spec, prof);

    const RootSystem& rs = *spec.rs;
    const auto kernel = roots_in(rs, prof.kernel_roots);
    // Structure constants whose commutator terms land in each kernel root.
    std::map<std::vector<int>, std::set<int>> used;
    std::vector<Root> sources = prof.le_roots;
    sources.insert(sources.end(), kernel.begin(), kernel.end());
    for (const auto& a : sources)
        for (const auto& g : kernel) {
            if (a == g) continue;
            for (const auto& sc : ctx.table->get(a, g)) used[(a.scaled(sc.m) + g.scaled(sc.n)).c].insert(sc.C);
        }
    for (const auto& d : kernel) {
        for (int C : used[d.c]) {
            std::optional<UnitElement> inv;
            for (const auto& u : unit_box(ring, ctx.c))
                if ((unit_value(ring, u).scaled(C)).is_one()) {
                    inv = u;
                    break;
                }
            auto cu = integer_as_unit(ring, C, ctx.c);
            if (!inv || !cu) throw std::logic_error("structure constant not invertible in " + ring.name);
            for (int i = 0; i < static_cast<int>(ring.t0.size()); ++i) {
                UnitElement one = unit_one(ring);
                p.add(Word::single(x_symbol(SymKind::xt, d, *inv, i), C) *
                          Word::single(x_symbol(SymKind::xt, d, one, i)).inverse(),
                      "structure-constant-power");
                for (const auto& a : rs.roots()) {
                    if (rs.cartan_int(d, a) != 1) continue;
                    Word h = h_unit_word(ring, a, *cu, 1);
                    p.add(h * Word::single(x_symbol(SymKind::xt, d, one, i)) * h.inverse() *
                              Word::single(x_symbol(SymKind::xt, d, one, i), -C),
                          "structure-constant-torus");
                }
            }
        }
    }
    return p;
}

std::string symbol_str(const RingSpec& ring, const GenSymbol& s)
{
    std::string root = s.root.str();
    if (s.kind == SymKind::h) return "h" + root + "{" + ring.units.at(static_cast<std::size_t>(s.gen)).name + "}";
    std::string head = s.kind == SymKind::x ? "x" : "xt";
    return head + root + "{" + unit_str(ring, s.unit) + ";" + ring.t0.at(static_cast<std::size_t>(s.t0)).name + "}";
}

std::string word_str(const RingSpec& ring, const Word& w)
{
    if (w.empty()) return "1";
    std::string out;
    for (const auto& l : w.letters()) {
        if (!out.empty()) out += " ";
        out += symbol_str(ring, l.sym);
        if (l.exp != 1) out += "^" + std::to_string(l.exp);
    }
    return out;
}

}  // namespace chev
