#include "chev/verify.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace chev {

Assignment default_assignment(const RingSpec& ring)
{
    Assignment a;
    for (const auto& g : ring.t0) a.t0.push_back(g.value);
    for (const auto& u : ring.units) a.units.push_back(u.value);
    return a;
}

namespace {

Poly unit_of(const UnitElement& u, const Assignment& a, std::int64_t modulus)
{
    Poly v = Poly::constant(1, modulus);
    for (std::size_t j = 0; j < u.e.size(); ++j)
        if (u.e[j]) v = v * a.units.at(j).unit_pow(u.e[j]);
    return v;
}

}  // namespace

Poly symbol_argument(const GenSymbol& s, const Assignment& a)
{
    const std::int64_t mod = a.t0.at(0).modulus();
    if (s.kind == SymKind::h) return a.units.at(static_cast<std::size_t>(s.gen));
    return unit_of(s.unit, a, mod) * a.t0.at(static_cast<std::size_t>(s.t0));
}

ModelMatrix eval_word(const Word& w, const GroupModel& model, const Assignment& a)
{
    const std::int64_t mod = a.t0.at(0).modulus();
    ModelMatrix M = ModelMatrix::identity(model.dim(), mod);
    for (const auto& l : w.letters()) {
        Poly arg = symbol_argument(l.sym, a);
        if (l.sym.kind == SymKind::h)
            M = M * model.h(l.sym.root, arg.unit_pow(l.exp));
        else
            M = M * model.x(l.sym.root, arg.scaled(l.exp));
    }
    return M;
}

VerifyReport verify_presentation(const Presentation& p, const GroupModel& model, const RingSpec& ring,
                                 std::size_t max_failures)
{
    VerifyReport rep;
    rep.check = "presentation:" + p.kind;
    if (model.rs().type() != p.type) throw std::invalid_argument("model root system does not match the presentation");
    const Assignment a = default_assignment(ring);
    // Generator matrices repeat across relators; cache them per letter.
    std::map<std::pair<GenSymbol, int>, ModelMatrix> cache;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        ++rep.total;
        ModelMatrix M = ModelMatrix::identity(model.dim(), ring.model.modulus);
        for (const auto& l : p.relators[i].letters()) {
            auto key = std::make_pair(l.sym, l.exp);
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, eval_word(Word({l}), model, a)).first;
            M = M * it->second;
        }
        if (M.is_identity()) {
            ++rep.passed;
        } else if (rep.failures.size() < max_failures) {
            auto d = M.diff(ModelMatrix::identity(model.dim(), ring.model.modulus), ring.model, 1);
            std::string detail = d.empty() ? "" : "entry (" + std::to_string(d[0].row) + "," + std::to_string(d[0].col) +
                                                      ") = " + d[0].lhs + ", expected " + d[0].rhs;
            rep.failures.push_back({i, p.families[i], word_str(ring, p.relators[i]), detail});
        }
    }
    return rep;
}

int kernel_level(const ParabolicSpec& spec, std::optional<int> borel_n, const Root& g)
{
    if (spec.is_borel()) {
        if (!borel_n) throw std::invalid_argument("the Borel case needs a chosen simple root");
        return g.height();
    }
    return alvl(spec, g);
}

std::optional<std::vector<PeeledFactor>> graded_peel(const ModelMatrix& M0, const GroupModel& model,
                                                     const ParabolicSpec& spec, std::optional<int> borel_n,
                                                     int min_level)
{
    ParabolicProfile prof = profile(spec, borel_n);
    std::map<int, std::vector<Root>> by_level;
    for (const auto& g : prof.kernel_roots) {
        int lv = kernel_level(spec, borel_n, g);
        if (lv >= min_level) by_level[lv].push_back(g);
    }
    ModelMatrix M = M0;
    std::vector<PeeledFactor> out;
    try {
        for (const auto& [lv, roots] : by_level)
            for (const auto& g : roots) {
                Poly c = model.root_coordinate(M, g);
                if (c.is_zero()) continue;
                M = model.x(g, -c) * M;
                out.push_back({g, c});
            }
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
    if (!M.is_identity()) return std::nullopt;
    return out;
}

namespace {

struct SymbolicVars {
    Poly r, s, u;
};

// The ring's model extended by free parameters r, s and a Laurent unit u.
SymbolicVars extend(const RingSpec& ring)
{
    CoefficientRing ext = ring.model;
    const std::int64_t mod = ext.modulus;
    std::size_t r = ext.add_var("r", false), s = ext.add_var("s", false), u = ext.add_var("u", true);
    return {Poly::variable(r, mod), Poly::variable(s, mod), Poly::variable(u, mod)};
}

void record(VerifyReport& rep, bool ok, const std::string& family, const std::string& item, const std::string& detail)
{
    ++rep.total;
    if (ok)
        ++rep.passed;
    else
        rep.failures.push_back({rep.total - 1, family, item, detail});
}

}  // namespace

VerifyReport verify_retract(const ParabolicSpec& spec, const GroupModel& model, const RingSpec& ring, int samples,
                            std::uint64_t seed, std::optional<int> borel_n)
{
    VerifyReport rep;
    rep.check = "retract";
    const RootSystem& rs = *spec.rs;
    ParabolicProfile prof = profile(spec, borel_n);
    SymbolicVars v = extend(ring);

    for (const auto& g : prof.kernel_roots) {
        ModelMatrix X = model.x(g, v.r);
        for (const auto& a : prof.le_roots) {
            ModelMatrix M = model.x(a, v.s) * X * model.x(a, -v.s);
            record(rep, graded_peel(M, model, spec, borel_n).has_value(), "normal", "x" + a.str() + " on " + g.str(),
                   "conjugate left the kernel");
        }
        for (const auto& a : rs.roots()) {
            ModelMatrix M = model.h(a, v.u) * X * model.h(a, v.u.unit_inverse());
            record(rep, graded_peel(M, model, spec, borel_n).has_value(), "normal", "h" + a.str() + " on " + g.str(),
                   "conjugate left the kernel");
        }
    }

    // Random words over extended-Levi, torus and kernel letters.
    std::mt19937_64 gen(seed);
    const int c = toral_constant(rs);
    const auto box = unit_box(ring, c);
    std::vector<std::pair<Root, bool>> xs;
    for (const auto& a : prof.le_roots) xs.emplace_back(a, false);
    for (const auto& g : prof.kernel_roots) xs.emplace_back(g, true);
    const Assignment asg = default_assignment(ring);
    const std::int64_t mod = ring.model.modulus;
    for (int k = 0; k < samples; ++k) {
        ModelMatrix W = ModelMatrix::identity(model.dim(), mod), Pinv = W;
        std::string desc;
        for (int len = 0; len < 8; ++len) {
            std::size_t pick = gen() % (xs.size() + static_cast<std::size_t>(rs.rank()));
            Poly uval = unit_of(box[gen() % box.size()], asg, mod);
            if (pick < xs.size()) {
                Poly arg = uval * asg.t0[gen() % asg.t0.size()];
                if (gen() % 2) arg = -arg;
                const auto& [a, kernel] = xs[pick];
                W = W * model.x(a, arg);
                if (!kernel) Pinv = model.x(a, -arg) * Pinv;
                desc += (kernel ? " k" : " x") + a.str();
            } else {
                Root a = rs.simple(static_cast<int>(pick - xs.size()));
                W = W * model.h(a, uval);
                Pinv = model.h(a, uval.unit_inverse()) * Pinv;
                desc += " h" + a.str();
            }
        }
        record(rep, graded_peel(W * Pinv, model, spec, borel_n).has_value(), "projection", desc.substr(1),
               "w * pi(w)^-1 is not in the kernel");
    }
    return rep;
}

VerifyReport verify_filtration(const ParabolicSpec& spec, const GroupModel& model, const RingSpec& ring,
                               std::optional<int> borel_n)
{
    VerifyReport rep;
    rep.check = "filtration";
    ParabolicProfile prof = profile(spec, borel_n);
    SymbolicVars v = extend(ring);
    for (const auto& g : prof.kernel_roots) {
        const int j1 = kernel_level(spec, borel_n, g);
        for (const auto& h : prof.kernel_roots) {
            const int j2 = kernel_level(spec, borel_n, h);
            ModelMatrix C = model.x(g, v.r) * model.x(h, v.s) * model.x(g, -v.r) * model.x(h, -v.s);
            record(rep, graded_peel(C, model, spec, borel_n, j1 + j2).has_value(), "commutator-level",
                   g.str() + "," + h.str(), "commutator below level " + std::to_string(j1 + j2));
            ModelMatrix N = model.x(h, v.s) * model.x(g, v.r) * model.x(h, -v.s);
            record(rep, graded_peel(N, model, spec, borel_n, j1).has_value(), "normal-level", g.str() + "," + h.str(),
                   "conjugate below level " + std::to_string(j1));
        }
    }
    return rep;
}

}  // namespace chev
