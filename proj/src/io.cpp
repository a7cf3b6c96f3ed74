#include "chev/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace chev {

namespace {

std::string trim(const std::string& s)
{
    std::size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

Poly parse_term(const CoefficientRing& ring, const std::string& term)
{
    Poly v = ring.one();
    std::stringstream ss(term);
    std::string f;
    while (std::getline(ss, f, '*')) {
        f = trim(f);
        if (f.empty()) throw std::invalid_argument("empty factor in '" + term + "'");
        if (std::isdigit(static_cast<unsigned char>(f[0]))) {
            v = v.scaled(std::stoll(f));
            continue;
        }
        std::size_t caret = f.find('^');
        std::string name = trim(f.substr(0, caret));
        int e = caret == std::string::npos ? 1 : std::stoi(f.substr(caret + 1));
        std::size_t idx = ring.index_of(name);
        if (e < 0 && !ring.laurent[idx]) throw std::invalid_argument("negative power of non-Laurent variable " + name);
        v = v * Poly::variable(idx, ring.modulus, e);
    }
    return v;
}

}  // namespace

Poly parse_poly(const CoefficientRing& ring, const std::string& text)
{
    Poly out = ring.zero();
    std::string cur;
    int sign = 1;
    auto flush = [&] {
        std::string t = trim(cur);
        if (t.empty()) throw std::invalid_argument("malformed ring element '" + text + "'");
        out = out + parse_term(ring, t).scaled(sign);
        cur.clear();
    };
    std::string s = trim(text);
    for (std::size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        bool exponent_sign = ch == '-' && i > 0 && s[i - 1] == '^';
        if ((ch == '+' || ch == '-') && !exponent_sign) {
            if (!trim(cur).empty()) flush();
            else if (i != 0) throw std::invalid_argument("malformed ring element '" + text + "'");
            sign = ch == '-' ? -1 : 1;
            continue;
        }
        cur += ch;
    }
    flush();
    return out;
}

json root_json(const Root& r)
{
    return r.c;
}

json roots_json(const RootSystem& rs)
{
    json j;
    j["schema"] = std::string("roots/") + schema_version;
    j["type"] = rs.type().name();
    j["rank"] = rs.rank();
    j["cartan"] = rs.cartan();
    json simples = json::array();
    for (const auto& a : rs.simples()) simples.push_back(root_json(a));
    j["simples"] = simples;
    j["count"] = rs.roots().size();
    json roots = json::array();
    for (std::size_t i = 0; i < rs.roots().size(); ++i) {
        const Root& a = rs.roots()[i];
        roots.push_back({{"index", i}, {"coeffs", a.c}, {"height", a.height()}, {"norm2", rs.norm2(a)},
                         {"long", rs.is_long(a)}});
    }
    j["roots"] = roots;
    return j;
}

namespace {

template <class F>
void for_each_constant(const RootSystem& rs, const StructureConstantTable& table, bool positive_only, F f)
{
    for (const auto& a : rs.roots())
        for (const auto& b : rs.roots()) {
            if (positive_only && (!a.positive() || !b.positive())) continue;
            if (a == b || a == -b) continue;
            for (const auto& sc : table.get(a, b)) f(a, b, sc);
        }
}

std::string root_csv(const Root& r)
{
    std::string s;
    for (std::size_t k = 0; k < r.c.size(); ++k) s += (k ? " " : "") + std::to_string(r.c[k]);
    return s;
}

}  // namespace

std::string structconsts_csv(const RootSystem& rs, const StructureConstantTable& table, bool positive_only)
{
    std::ostringstream os;
    os << "a,b,m,n,C\n";
    for_each_constant(rs, table, positive_only, [&](const Root& a, const Root& b, const StructureConstant& sc) {
        os << root_csv(a) << "," << root_csv(b) << "," << sc.m << "," << sc.n << "," << sc.C << "\n";
    });
    return os.str();
}

json structconsts_json(const RootSystem& rs, const StructureConstantTable& table, bool positive_only)
{
    json j;
    j["schema"] = std::string("structconsts/") + schema_version;
    j["type"] = rs.type().name();
    json rows = json::array();
    for_each_constant(rs, table, positive_only, [&](const Root& a, const Root& b, const StructureConstant& sc) {
        rows.push_back({{"a", a.c}, {"b", b.c}, {"m", sc.m}, {"n", sc.n}, {"C", sc.C}});
    });
    j["constants"] = rows;
    return j;
}

namespace {

json roots_array(const std::vector<Root>& v)
{
    json a = json::array();
    for (const auto& r : v) a.push_back(root_json(r));
    return a;
}

json one_based(const std::vector<int>& I)
{
    json a = json::array();
    for (int i : I) a.push_back(i + 1);
    return a;
}

}  // namespace

json parabolic_json(const ParabolicSpec& spec, std::optional<int> borel_n)
{
    ParabolicProfile p = profile(spec, borel_n);
    json j;
    j["schema"] = std::string("parabolic/") + schema_version;
    j["type"] = spec.rs->type().name();
    j["I"] = one_based(spec.I);
    if (borel_n) j["borel_n"] = *borel_n + 1;
    j["adj"] = roots_array(p.adj);
    j["nonadj"] = roots_array(p.nonadj);
    j["ext"] = roots_array(p.ext);
    json comps = json::array();
    for (const auto& c : p.levi_components) comps.push_back(roots_array(c));
    j["levi_components"] = comps;
    j["levi_roots"] = roots_array(p.levi_roots);
    j["le_roots"] = roots_array(p.le_roots);
    j["unipotent_roots"] = roots_array(p.unipotent_roots);
    json kernel = json::array();
    for (const auto& g : p.kernel_roots) {
        json k = {{"root", g.c}};
        if (!spec.is_borel()) k["alvl"] = alvl(spec, g);
        kernel.push_back(k);
    }
    j["kernel_roots"] = kernel;
    j["retracts_onto_almost_borel"] = retracts_onto_almost_borel(spec);
    return j;
}

json toral_json(const RootSystem& rs)
{
    json j;
    j["schema"] = std::string("toral/") + schema_version;
    j["type"] = rs.type().name();
    j["c"] = toral_constant(rs);
    json pairs = json::array();
    for (const auto& a : rs.roots())
        for (const auto& b : rs.roots()) {
            if (a == b || a == -b) continue;
            ToralPair tp = toral_pair(rs, a, b);
            json e = {{"a", a.c}, {"b", b.c}, {"construction", tp.construction}, {"n", tp.n}};
            if (tp.bystander) e["bystander"] = tp.bystander->c;
            if (tp.construction == "pq") {
                e["p"] = tp.p;
                e["q"] = tp.q;
            }
            pairs.push_back(e);
        }
    j["pairs"] = pairs;
    return j;
}

namespace {

std::string kind_str(SymKind k)
{
    switch (k) {
    case SymKind::x: return "x";
    case SymKind::xt: return "xt";
    case SymKind::h: return "h";
    }
    return "?";
}

std::map<GenSymbol, std::size_t> generator_index(const Presentation& p)
{
    std::map<GenSymbol, std::size_t> idx;
    for (std::size_t k = 0; k < p.generators.size(); ++k) idx.emplace(p.generators[k], k);
    for (const auto& w : p.relators)
        for (const auto& l : w.letters())
            if (!idx.count(l.sym)) throw std::logic_error("relator uses an unlisted generator");
    return idx;
}

}  // namespace

json presentation_json(const Presentation& p, const RingSpec& ring)
{
    auto idx = generator_index(p);
    json j;
    j["schema"] = std::string("presentation/") + schema_version;
    j["kind"] = p.kind;
    j["type"] = p.type.name();
    j["I"] = one_based(p.I);
    j["ring"] = p.ring;
    j["c"] = p.c;
    j["finite"] = p.finite;
    j["metadata"] = p.metadata;
    json counts = json::object();
    for (const auto& [f, n] : p.family_counts()) counts[f] = n;
    j["family_counts"] = counts;
    json gens = json::array();
    for (std::size_t k = 0; k < p.generators.size(); ++k) {
        const GenSymbol& s = p.generators[k];
        json g = {{"id", k + 1}, {"kind", kind_str(s.kind)}, {"root", s.root.c}};
        if (s.kind == SymKind::h) {
            g["unit_generator"] = ring.units.at(static_cast<std::size_t>(s.gen)).name;
        } else {
            g["unit"] = s.unit.e;
            g["t0"] = ring.t0.at(static_cast<std::size_t>(s.t0)).name;
        }
        g["text"] = symbol_str(ring, s);
        gens.push_back(g);
    }
    j["generators"] = gens;
    json rels = json::array();
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        json letters = json::array();
        for (const auto& l : p.relators[i].letters()) letters.push_back({idx.at(l.sym) + 1, l.exp});
        json r = {{"family", p.families[i]}, {"letters", letters}};
        if (p.levels[i] >= 0) r["level"] = p.levels[i];
        rels.push_back(r);
    }
    j["relators"] = rels;
    return j;
}

std::string presentation_text(const Presentation& p, const RingSpec& ring)
{
    auto idx = generator_index(p);
    std::ostringstream os;
    os << "# kind " << p.kind << " type " << p.type.name() << " ring " << p.ring << " c " << p.c << " finite "
       << (p.finite ? "true" : "false") << "\n";
    for (const auto& [k, v] : p.metadata) os << "# " << k << " " << v << "\n";
    os << "generators " << p.generators.size() << "\n";
    for (std::size_t k = 0; k < p.generators.size(); ++k)
        os << "g" << k + 1 << " " << symbol_str(ring, p.generators[k]) << "\n";
    os << "relators " << p.relators.size() << "\n";
    for (const auto& w : p.relators) {
        bool first = true;
        for (const auto& l : w.letters()) {
            os << (first ? "" : "*") << "g" << idx.at(l.sym) + 1;
            if (l.exp != 1) os << "^" << l.exp;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

json report_json(const VerifyReport& r)
{
    json j;
    j["schema"] = std::string("report/") + schema_version;
    j["check"] = r.check;
    j["total"] = r.total;
    j["passed"] = r.passed;
    j["ok"] = r.ok();
    json f = json::array();
    for (const auto& x : r.failures)
        f.push_back({{"index", x.index}, {"family", x.family}, {"item", x.item}, {"detail", x.detail}});
    j["failures"] = f;
    return j;
}

json status_json(const FPStatus& s)
{
    json j;
    j["schema"] = std::string("verdict/") + schema_version;
    j["verdict"] = to_string(s.verdict);
    json r = json::array();
    for (const auto& x : s.reasons) r.push_back({{"rule", x.rule}, {"citation", x.citation}, {"line", x.line}});
    j["reasons"] = r;
    return j;
}

namespace {

json unit_terms_json(const std::vector<UnitTerm>& terms)
{
    json a = json::array();
    for (const auto& t : terms) a.push_back({{"a", t.a}, {"unit", t.unit.e}, {"x", t.x}});
    return a;
}

std::vector<UnitTerm> unit_terms_from(const json& a, std::size_t rank)
{
    std::vector<UnitTerm> out;
    for (const auto& t : a) {
        UnitTerm u{t.at("a").get<std::int64_t>(), UnitElement{t.at("unit").get<std::vector<int>>()}, t.at("x").get<int>()};
        if (u.unit.e.size() != rank) throw std::invalid_argument("unit exponent vector has the wrong length");
        out.push_back(u);
    }
    return out;
}

}  // namespace

json ring_json(const RingSpec& ring)
{
    json j;
    j["schema"] = std::string("ring/") + schema_version;
    j["name"] = ring.name;
    j["char"] = ring.characteristic;
    j["has_model"] = ring.has_model;
    if (ring.has_model) {
        j["model_modulus"] = ring.model.modulus;
        json vars = json::array();
        for (std::size_t k = 0; k < ring.model.names.size(); ++k)
            vars.push_back({{"name", ring.model.names[k]}, {"laurent", static_cast<bool>(ring.model.laurent[k])}});
        j["variables"] = vars;
    }
    json units = json::array();
    for (const auto& u : ring.units)
        units.push_back({{"name", u.name}, {"order", u.order}, {"value", ring.model.str(u.value)}});
    j["units"] = units;
    json t0 = json::array();
    for (const auto& x : ring.t0) t0.push_back({{"name", x.name}, {"value", ring.model.str(x.value)}});
    j["t0"] = t0;
    j["invertible_primes"] = ring.invertible_primes;
    j["parabolics_fg"] = to_string(ring.parabolics_fg);
    j["borel2_fp"] = to_string(ring.borel2_fp);
    if (ring.arithmetic) j["arithmetic"] = {{"char", ring.arithmetic->global_char}, {"S", ring.arithmetic->S_size}};
    json add = json::array();
    for (const auto& pat : ring.additive_relators) add.push_back(unit_terms_json(pat));
    j["additive_relators"] = add;
    json table = json::array();
    for (const auto& [k, v] : ring.product_table)
        table.push_back({{"i", k.i}, {"j", k.j}, {"m", k.m}, {"n", k.n}, {"terms", unit_terms_json(v)}});
    j["product_table"] = table;
    json facts = json::object();
    for (const auto& [k, v] : ring.facts) facts[k] = to_string(v);
    j["facts"] = facts;
    return j;
}

RingSpec ring_from_json(const json& j)
{
    RingSpec r;
    r.name = j.at("name").get<std::string>();
    r.characteristic = j.value("char", std::int64_t{0});
    r.has_model = j.value("has_model", true);
    r.model.modulus = j.value("model_modulus", r.characteristic);
    if (j.contains("variables"))
        for (const auto& v : j.at("variables")) r.model.add_var(v.at("name").get<std::string>(), v.value("laurent", false));
    for (const auto& u : j.at("units"))
        r.units.push_back({u.at("name").get<std::string>(), u.value("order", 0),
                           r.has_model ? parse_poly(r.model, u.at("value").get<std::string>()) : Poly(r.model.modulus)});
    for (const auto& x : j.at("t0"))
        r.t0.push_back({x.at("name").get<std::string>(),
                        r.has_model ? parse_poly(r.model, x.at("value").get<std::string>()) : r.model.one()});
    if (j.contains("invertible_primes")) r.invertible_primes = j.at("invertible_primes").get<std::set<std::int64_t>>();
    r.parabolics_fg = parse_tri(j.value("parabolics_fg", std::string("unknown")));
    r.borel2_fp = parse_tri(j.value("borel2_fp", std::string("unknown")));
    if (j.contains("arithmetic"))
        r.arithmetic = Arithmetic{j.at("arithmetic").at("char").get<std::int64_t>(), j.at("arithmetic").at("S").get<int>()};
    if (j.contains("additive_relators"))
        for (const auto& pat : j.at("additive_relators")) r.additive_relators.push_back(unit_terms_from(pat, r.rank()));
    if (j.contains("product_table"))
        for (const auto& e : j.at("product_table"))
            r.product_table[{e.at("i").get<int>(), e.at("j").get<int>(), e.at("m").get<int>(), e.at("n").get<int>()}] =
                unit_terms_from(e.at("terms"), r.rank());
    if (j.contains("facts"))
        for (const auto& [k, v] : j.at("facts").items()) r.facts[k] = parse_tri(v.get<std::string>());
    r.validate();
    return r;
}

RingSpec load_ring(const std::string& preset_or_path, std::int64_t characteristic, int S_size)
{
    std::ifstream in(preset_or_path);
    if (!in) return ring_preset(preset_or_path, characteristic, S_size);
    json j = json::parse(in);
    return ring_from_json(j);
}

}  // namespace chev
