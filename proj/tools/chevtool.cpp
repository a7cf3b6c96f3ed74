#include "chev/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <sstream>

using namespace chev;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_unknown = 2;
constexpr int exit_usage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string type;
    int rank = 0;
    std::string I;
    std::string blocks;
    std::string ring = "Z";
    int S = 0;
    long long characteristic = -1;
    std::string format;
    std::uint64_t seed = 1;
    std::string truncate;
    std::string kind = "auto";
    std::string le = "infer";
    std::string mode = "auto";
    std::string what = "all";
    int borel_n = 0;
    int samples = 40;
    bool all = false;
};

std::vector<int> parse_ints(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("expected a comma-separated list of integers, got '" + s + "'");
        }
    }
    return out;
}

std::shared_ptr<const RootSystem> root_system(const Options& o)
{
    RootSystemType t;
    if (!o.blocks.empty()) {
        int n = 0;
        for (int b : parse_ints(o.blocks)) n += b;
        t = {'A', n - 1};
        if (!o.type.empty() && RootSystemType::parse(o.type) != t && !(o.type == "A" && o.rank == n - 1))
            throw UsageError("--blocks sum to " + std::to_string(n) + ", which needs --type A" + std::to_string(n - 1));
    } else if (o.type.empty()) {
        throw UsageError("--type is required (e.g. --type A2, or --type B --rank 3)");
    } else if (o.type.size() == 1) {
        if (o.rank <= 0) throw UsageError("--type " + o.type + " needs --rank");
        t = {o.type[0], o.rank};
    } else {
        try {
            t = RootSystemType::parse(o.type);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        if (o.rank > 0 && o.rank != t.rank) throw UsageError("--rank disagrees with --type");
    }
    if (!t.valid()) throw UsageError("not a valid root system type: " + t.name());
    return std::make_shared<const RootSystem>(RootSystem::build(t));
}

ParabolicSpec parabolic(const Options& o, const std::shared_ptr<const RootSystem>& rs)
{
    if (!o.blocks.empty()) {
        if (!o.I.empty()) throw UsageError("give either --blocks or --I, not both");
        auto b = parse_ints(o.blocks);
        ParabolicSpec s = blocks_to_I(rs->rank() + 1, b);
        return ParabolicSpec(rs, s.I);
    }
    if (o.I.empty() || o.I == "none") return ParabolicSpec(rs, {});
    if (o.I == "long" || o.I == "short") {
        if (rs->rank() != 2 || rs->type().simply_laced())
            throw UsageError("--I long/short needs a rank-2 type with two root lengths");
        for (int i = 0; i < 2; ++i)
            if (rs->is_long(rs->simple(i)) == (o.I == "long")) return ParabolicSpec(rs, {i});
    }
    std::vector<int> I;
    for (int i : parse_ints(o.I)) {
        if (i < 1 || i > rs->rank()) throw UsageError("--I index " + std::to_string(i) + " is outside 1.." + std::to_string(rs->rank()));
        I.push_back(i - 1);
    }
    return ParabolicSpec(rs, I);
}

RingSpec ring(const Options& o)
{
    RingSpec r;
    try {
        r = load_ring(o.ring, o.characteristic > 0 ? o.characteristic : 0, o.S > 0 ? o.S : 1);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (o.S > 0 || o.characteristic >= 0) {
        Arithmetic a = r.arithmetic.value_or(Arithmetic{r.characteristic, 1});
        if (o.S > 0) a.S_size = o.S;
        if (o.characteristic >= 0) a.global_char = o.characteristic;
        if (a.global_char != r.characteristic && r.has_model)
            throw UsageError("--char disagrees with the characteristic of ring " + r.name);
        r.arithmetic = a;
    }
    return r;
}

Truncation truncation(const Options& o)
{
    Truncation t;
    if (o.truncate.empty()) return t;
    auto v = parse_ints(o.truncate);
    if (v.size() != 2 || v[0] < 1 || v[1] < 0) throw UsageError("--truncate expects max_T,max_exponent");
    t.max_T = v[0];
    t.max_exponent = v[1];
    return t;
}

void print_json(const json& j)
{
    std::cout << j.dump(2) << "\n";
}

std::string format_or(const Options& o, const std::string& def)
{
    std::string f = o.format.empty() ? def : o.format;
    if (f != "json" && f != "text" && f != "csv") throw UsageError("--format must be json, text or csv");
    return f;
}

int cmd_roots(const Options& o)
{
    auto rs = root_system(o);
    std::string f = format_or(o, "json");
    if (f == "json") {
        print_json(roots_json(*rs));
    } else {
        for (std::size_t i = 0; i < rs->roots().size(); ++i) {
            const Root& a = rs->roots()[i];
            std::cout << i << (f == "csv" ? "," : " ") << a.str() << (f == "csv" ? "," : " ") << a.height()
                      << (f == "csv" ? "," : " ") << (rs->is_long(a) ? "long" : "short") << "\n";
        }
    }
    return exit_ok;
}

int cmd_structconsts(const Options& o)
{
    auto rs = root_system(o);
    AdjointModel adj(ChevalleyBasisData::build(*rs));
    StructureConstantTable table(adj);
    if (format_or(o, "csv") == "json")
        print_json(structconsts_json(*rs, table, !o.all));
    else
        std::cout << structconsts_csv(*rs, table, !o.all);
    return exit_ok;
}

std::optional<int> borel_choice(const Options& o, const ParabolicSpec& spec)
{
    if (!spec.is_borel() || o.borel_n == 0) return std::nullopt;
    if (o.borel_n < 1 || o.borel_n > spec.rs->rank()) throw UsageError("--borel-n is outside 1..rank");
    return o.borel_n - 1;
}

int cmd_parabolic(const Options& o)
{
    auto rs = root_system(o);
    ParabolicSpec spec = parabolic(o, rs);
    print_json(parabolic_json(spec, borel_choice(o, spec)));
    return exit_ok;
}

int cmd_toral(const Options& o)
{
    print_json(toral_json(*root_system(o)));
    return exit_ok;
}

Presentation build(const Options& o, const ParabolicSpec& spec, const RingSpec& r)
{
    std::string kind = o.kind;
    if (kind == "auto") {
        if (spec.is_borel())
            kind = "borel";
        else if (r.borel2_fp == Tri::yes)
            kind = "case1";
        else
            kind = "nvb";
    }
    if (kind == "unipotent") return present_unipotent(spec, r, truncation(o));
    if (kind == "kernel") return present_kernel(spec, r, truncation(o));
    if (kind == "borel") return present_borel_finite(spec.rs, r);
    if (kind == "case1") return present_parabolic_case1(spec, r);
    if (kind == "nvb") return present_parabolic_nvb(spec, r);
    throw UsageError("--kind must be one of auto, unipotent, kernel, borel, case1, nvb");
}

int cmd_present(const Options& o)
{
    auto rs = root_system(o);
    ParabolicSpec spec = parabolic(o, rs);
    RingSpec r = ring(o);
    Presentation p = build(o, spec, r);
    if (format_or(o, "json") == "json")
        print_json(presentation_json(p, r));
    else
        std::cout << presentation_text(p, r);
    return exit_ok;
}

int cmd_verify(const Options& o)
{
    auto rs = root_system(o);
    ParabolicSpec spec = parabolic(o, rs);
    RingSpec r = ring(o);
    if (!r.has_model) throw Refusal("ring " + r.name + " has no concrete model to evaluate in");
    auto cb = ChevalleyBasisData::build(*rs);
    std::vector<std::unique_ptr<GroupModel>> models;
    models.push_back(std::make_unique<AdjointModel>(cb));
    if (rs->type().family == 'A') models.push_back(std::make_unique<SlnModel>(cb));
    if (o.what != "all" && o.what != "presentation" && o.what != "retract" && o.what != "filtration")
        throw UsageError("--what must be all, presentation, retract or filtration");
    std::optional<int> bn = borel_choice(o, spec);
    if (spec.is_borel() && !bn && o.what != "presentation" && o.what != "all")
        throw UsageError("retract and filtration checks on the Borel need --borel-n");
    json out;
    out["schema"] = std::string("verify/") + schema_version;
    out["seed"] = o.seed;
    json reports = json::array();
    bool ok = true;
    std::optional<Presentation> p;
    if (o.what == "all" || o.what == "presentation") p = build(o, spec, r);
    for (const auto& m : models) {
        std::vector<VerifyReport> rs_;
        if (p) rs_.push_back(verify_presentation(*p, *m, r));
        bool structural = !spec.is_borel() || bn;
        if (structural && (o.what == "all" || o.what == "retract"))
            rs_.push_back(verify_retract(spec, *m, r, o.samples, o.seed, bn));
        if (structural && (o.what == "all" || o.what == "filtration")) rs_.push_back(verify_filtration(spec, *m, r, bn));
        for (auto& rep : rs_) {
            json j = report_json(rep);
            j["model"] = m->name();
            ok = ok && rep.ok();
            reports.push_back(j);
        }
    }
    out["reports"] = reports;
    out["ok"] = ok;
    print_json(out);
    return ok ? exit_ok : exit_fail;
}

int verdict_code(Verdict v)
{
    switch (v) {
    case Verdict::finitely_presented: return exit_ok;
    case Verdict::not_finitely_presented: return exit_fail;
    default: return exit_unknown;
    }
}

int cmd_classify(const Options& o)
{
    auto rs = root_system(o);
    ParabolicSpec spec = parabolic(o, rs);
    RingSpec r = ring(o);
    std::string mode = o.mode;
    if (mode == "auto") mode = (o.S > 0 || o.characteristic >= 0 || !r.has_model) ? "arithmetic" : "ring";
    FPStatus st;
    if (mode == "arithmetic") {
        if (!r.arithmetic) throw UsageError("ring " + r.name + " carries no S-arithmetic data; give --char and --S");
        st = arithmetic_rule(spec, *r.arithmetic, levi_ranks(spec), nvb(r, rs->type()));
    } else if (mode == "ring") {
        Tri le;
        if (o.le == "infer")
            le = infer_le_status(spec, r);
        else
            try {
                le = parse_tri(o.le);
            } catch (const std::exception&) {
                throw UsageError("--le must be yes, no, unknown or infer");
            }
        st = ring_rule(spec, r, le);
    } else {
        throw UsageError("--mode must be auto, ring or arithmetic");
    }
    json j = status_json(st);
    j["type"] = rs->type().name();
    json I = json::array();
    for (int i : spec.I) I.push_back(i + 1);
    j["I"] = I;
    j["ring"] = r.name;
    j["mode"] = mode;
    print_json(j);
    return verdict_code(st.verdict);
}

int cmd_example(const Options& o)
{
    RingSpec r = ring(o);
    auto [p1, p2] = gl12_block_example(r);
    json j;
    j["schema"] = std::string("example/") + schema_version;
    j["ring"] = r.name;
    j["P1"] = status_json(p1);
    j["P1"]["blocks"] = {1, 5, 1, 5};
    j["P2"] = status_json(p2);
    j["P2"]["blocks"] = {5, 1, 1, 5};
    print_json(j);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact toolkit for root systems, Chevalley groups and parabolic presentations"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* c, bool ring_flags) {
        c->add_option("--type", o.type, "root system type, e.g. A2, G2, or a family letter with --rank");
        c->add_option("--rank", o.rank, "rank when --type is a family letter");
        if (ring_flags) {
            c->add_option("--I", o.I, "comma-separated Bourbaki indices, 'long'/'short' in rank 2, or 'none'");
            c->add_option("--blocks", o.blocks, "type-A block sizes n1,n2,...");
            c->add_option("--ring", o.ring, "ring preset (Z, Z_half, Z_laurent, F<q>_poly, F<q>_laurent, O_S) or JSON file");
            c->add_option("--S", o.S, "number of places |S|");
            c->add_option("--char", o.characteristic, "characteristic of the global field");
            c->add_option("--borel-n", o.borel_n, "chosen simple root for the Borel case (1-based)");
        }
        c->add_option("--format", o.format, "json, text or csv");
    };
    auto* roots = app.add_subcommand("roots", "list the roots of a system");
    common(roots, false);
    auto* sc = app.add_subcommand("structconsts", "commutator structure constants");
    common(sc, false);
    sc->add_flag("--all", o.all, "include negative roots");
    auto* pinfo = app.add_subcommand("parabolic-info", "combinatorics of a standard parabolic");
    common(pinfo, true);
    auto* toral = app.add_subcommand("toral", "toral pairs and the toral constant");
    common(toral, false);
    auto* present = app.add_subcommand("present", "emit a presentation");
    common(present, true);
    present->add_option("--kind", o.kind, "auto, unipotent, kernel, borel, case1 or nvb");
    present->add_option("--truncate", o.truncate, "max_T,max_exponent for schematic presentations");
    auto* verify = app.add_subcommand("verify", "check relators and the retract structure in exact models");
    common(verify, true);
    verify->add_option("--kind", o.kind, "presentation kind, as for present");
    verify->add_option("--truncate", o.truncate, "max_T,max_exponent for schematic presentations");
    verify->add_option("--what", o.what, "all, presentation, retract or filtration");
    verify->add_option("--seed", o.seed, "seed for sampled words");
    verify->add_option("--samples", o.samples, "number of sampled words");
    auto* classify = app.add_subcommand("classify", "finite presentability verdict");
    common(classify, true);
    classify->add_option("--le", o.le, "extended Levi factor status: yes, no, unknown or infer");
    classify->add_option("--mode", o.mode, "auto, ring or arithmetic");
    auto* example = app.add_subcommand("example-1-2", "the two block parabolics of GL12 over Z[t,t^-1]");
    example->add_option("--ring", o.ring, "ring preset")->default_val("Z_laurent");
    example->add_option("--S", o.S, "number of places |S|");
    example->add_option("--char", o.characteristic, "characteristic of the global field");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }
    try {
        if (*roots) return cmd_roots(o);
        if (*sc) return cmd_structconsts(o);
        if (*pinfo) return cmd_parabolic(o);
        if (*toral) return cmd_toral(o);
        if (*present) return cmd_present(o);
        if (*verify) return cmd_verify(o);
        if (*classify) return cmd_classify(o);
        if (*example) return cmd_example(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Refusal& e) {
        json j = {{"schema", std::string("verdict/") + schema_version}, {"verdict", "unknown"}, {"refusal", e.what()}};
        print_json(j);
        return exit_unknown;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_fail;
    }
    return exit_usage;
}
