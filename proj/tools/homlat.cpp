// homlat: command-line front end for the homlat library.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 parse or usage error,
// 3 budget exhausted, 4 Sub(Q)/= without a top.

#include <homlat/fixtures.hpp>
#include <homlat/forest.hpp>
#include <homlat/hom.hpp>
#include <homlat/homlat.hpp>
#include <homlat/io.hpp>
#include <homlat/synth.hpp>
#include <homlat/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace homlat;
using nlohmann::ordered_json;

enum Exit { Ok = 0, Mismatch = 1, Usage = 2, Budget = 3, NoTop = 4 };

struct Global {
    bool dot = false;
    bool json = false;
    bool reduce = false;
    std::size_t budget = 100'000;
    unsigned threads = 1;
};

Poset load_poset(const std::string & path, const Global & g)
{
    return io::parse_poset(io::read_file(path), g.reduce ? CoverMode::Reduce : CoverMode::Strict).poset;
}

io::AlgebraFile load_algebra(const std::string & path) { return io::parse_algebra(io::read_file(path)); }

std::string elem_label(const io::AlgebraFile & f, std::size_t x) { return f.elements.empty() ? std::to_string(x) : f.elements[x]; }

std::string set_label(const io::AlgebraFile & f, const Bitset & s)
{
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t x) {
        out += (first ? "" : ",") + elem_label(f, x);
        first = false;
    });
    return out + "}";
}

void print_lattice(const Poset & p)
{
    std::cout << "elements: " << p.size() << "\n";
    for (std::size_t x = 0; x < p.size(); ++x)
        std::cout << "  " << x << ": " << p.name(x) << "\n";
    auto covers = p.covers();
    std::sort(covers.begin(), covers.end());
    std::cout << "covers:\n";
    for (auto [lo, hi] : covers)
        std::cout << "  " << lo << " < " << hi << "\n";
}

int cmd_forest(const std::string & path, const Global & g)
{
    auto p = load_poset(path, g);
    auto f = covering_forest(p, g.budget);
    if (g.dot) {
        std::vector<std::string> names;
        for (auto & w : f.words())
            names.push_back(w.label(p));
        auto covers = f.order().covers();
        std::cout << io::to_dot(Poset::from_covers(std::move(names), std::move(covers)), "forest");
        return Ok;
    }
    if (g.json) {
        ordered_json j;
        j["words"] = ordered_json::array();
        for (std::size_t i = 0; i < f.size(); ++i)
            j["words"].push_back({{"word", f.word(i).label(p)}, {"phi", p.name(f.phi(i))}});
        auto covers = f.order().covers();
        std::sort(covers.begin(), covers.end());
        j["covers"] = covers;
        std::cout << j.dump() << "\n";
        return Ok;
    }
    std::cout << "words: " << f.size() << "\n";
    for (std::size_t i = 0; i < f.size(); ++i)
        std::cout << "  " << i << ": " << f.word(i).label(p) << "  phi=" << p.name(f.phi(i)) << "\n";
    auto covers = f.order().covers();
    std::sort(covers.begin(), covers.end());
    std::cout << "covers:\n";
    for (auto [lo, hi] : covers)
        std::cout << "  " << f.word(lo).label(p) << " < " << f.word(hi).label(p) << "\n";
    return Ok;
}

int cmd_synth(const std::string & path, const std::string & out, const Global & g)
{
    auto p = load_poset(path, g);
    auto b = synthesize_quasiprimal(p, g.budget);
    io::AlgebraFile f{b.q, {}, io::kSynthMarker};
    for (std::size_t i = 0; i < b.q.size(); ++i)
        f.elements.push_back(b.label(i));
    auto text = io::write_algebra(f);
    if (out.empty())
        std::cout << text;
    else {
        std::ofstream os(out, std::ios::binary);
        if (! os)
            throw Error(ErrorKind::Parse, "cannot write '" + out + "'");
        os << text;
    }
    return Ok;
}

int cmd_homlattice(const std::string & path, bool assume, const Global & g)
{
    auto f = load_algebra(path);
    if (! f.synthesized() && ! assume) {
        std::cerr << "error: " << path << " was not produced by 'homlat synth'; pass --assume-quasiprimal to treat it as quasi-primal\n";
        return Usage;
    }
    EngineOptions eo{g.budget, g.threads};
    auto shp = sub_hom_poset(f.algebra, eo);
    auto trivial = trivial_subalgebra(f.algebra);
    auto lat = hom_lattice_from(shp, trivial.has_value());
    if (g.dot) {
        std::cout << io::to_dot(lat.poset(), "L");
        return Ok;
    }
    if (! f.synthesized())
        std::cout << "assumption: input is quasi-primal (asserted, not checked)\n";
    std::cout << "subalgebras: " << shp.subuniverses.size() << "\n";
    std::cout << "trivial subalgebra: " << (trivial ? set_label(f, Bitset::singleton(f.algebra.size(), *trivial)) : std::string("none")) << "\n";
    std::cout << "Sub/= classes: " << shp.order.size() << "\n";
    for (std::size_t c = 0; c < shp.order.size(); ++c) {
        Bitset s(f.algebra.size());
        for (auto e : shp.representatives[c].elements)
            s.set(e);
        std::cout << "  " << c << ": " << set_label(f, s) << "\n";
    }
    auto covers = shp.order.covers();
    std::sort(covers.begin(), covers.end());
    std::cout << "Sub/= covers:\n";
    for (auto [lo, hi] : covers)
        std::cout << "  " << lo << " < " << hi << "\n";
    std::cout << "lattice ";
    print_lattice(lat.poset());
    return Ok;
}

int print_report(const verify::Report & r)
{
    for (auto & c : r)
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    auto bad = std::find_if(r.begin(), r.end(), [](const verify::Check & c) { return ! c.pass; });
    if (bad != r.end()) {
        std::cout << "first failure: " << bad->name << (bad->detail.empty() ? "" : ": " + bad->detail) << "\n";
        return Mismatch;
    }
    std::cout << "all " << r.size() << " checks passed\n";
    return Ok;
}

int cmd_verify(const std::string & what, const std::string & fig2_path, const Global & g)
{
    Poset fig2 = fig2_path.empty() ? figure2_poset() : load_poset(fig2_path, g);
    if (what == "figures")
        return print_report(verify::figures(fig2));
    if (what == "examples")
        return print_report(verify::examples());
    return print_report(verify::roundtrip(fig2, EngineOptions{g.budget, g.threads}));
}

int cmd_con(const std::string & path, const Global & g)
{
    auto f = load_algebra(path);
    auto con = congruence_lattice(f.algebra, g.budget);
    if (g.dot) {
        std::cout << io::to_dot(con.lattice.poset(), "Con");
        return Ok;
    }
    if (g.json) {
        ordered_json j;
        j["congruences"] = ordered_json::array();
        for (auto & c : con.congruences)
            j["congruences"].push_back(c.block_ids());
        auto covers = con.lattice.poset().covers();
        std::sort(covers.begin(), covers.end());
        j["covers"] = covers;
        std::cout << j.dump() << "\n";
        return Ok;
    }
    std::cout << "congruences: " << con.congruences.size() << "\n";
    for (std::size_t i = 0; i < con.congruences.size(); ++i)
        std::cout << "  " << i << ": " << con.congruences[i].to_string() << "\n";
    auto covers = con.lattice.poset().covers();
    std::sort(covers.begin(), covers.end());
    std::cout << "covers:\n";
    for (auto [lo, hi] : covers)
        std::cout << "  " << lo << " < " << hi << "\n";
    return Ok;
}

int cmd_hom(const std::string & a_path, const std::string & b_path, bool count, const Global & g)
{
    auto a = load_algebra(a_path).algebra;
    auto b = load_algebra(b_path).algebra;
    if (count) {
        auto n = count_homs(a, b);
        if (g.json)
            std::cout << ordered_json{{"count", n}}.dump() << "\n";
        else
            std::cout << n << "\n";
        return Ok;
    }
    auto h = find_hom(a, b);
    if (g.json) {
        ordered_json j;
        j["exists"] = h.has_value();
        if (h)
            j["map"] = h->map;
        std::cout << j.dump() << "\n";
        return Ok;
    }
    if (! h) {
        std::cout << "no homomorphism\n";
        return Ok;
    }
    std::cout << "homomorphism:";
    for (auto y : h->map)
        std::cout << " " << y;
    std::cout << "\n";
    return Ok;
}

int cmd_core(const std::string & path, const Global & g)
{
    auto f = load_algebra(path);
    auto core = core_of(f.algebra);
    if (g.json) {
        std::cout << ordered_json{{"size", core.algebra.size()}, {"elements", core.elements}}.dump() << "\n";
        return Ok;
    }
    Bitset s(f.algebra.size());
    for (auto e : core.elements)
        s.set(e);
    std::cout << "core size: " << core.algebra.size() << "\n" << "elements: " << set_label(f, s) << "\n";
    return Ok;
}

int cmd_fixture(const std::string & name, bool list)
{
    if (list || name.empty()) {
        for (auto & f : fixtures())
            std::cout << f.name << "  " << f.description << "\n";
        return Ok;
    }
    auto f = find_fixture(name);
    if (! f) {
        std::cerr << "error: unknown fixture '" << name << "'\n";
        return Usage;
    }
    std::cout << f->text();
    return Ok;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Homomorphism orders and lattices of finite algebras"};
    app.require_subcommand(1);
    Global g;
    app.add_flag("--dot", g.dot, "Emit a DOT Hasse diagram");
    app.add_flag("--json", g.json, "Emit JSON");
    app.add_flag("--reduce", g.reduce, "Drop redundant cover pairs instead of rejecting them");
    app.add_option("--budget", g.budget, "Cap on enumerated objects (subuniverses, congruences, words)");
    app.add_option("--threads", g.threads, "Worker threads for pairwise hom checks (0 = all cores)");

    std::string path, path2, out, fig2_path, what, name;
    bool assume = false, count = false, list = false;

    auto * forest = app.add_subcommand("forest", "Covering forest of a poset");
    forest->add_option("poset", path, "Poset file")->required();
    auto * synth = app.add_subcommand("synth", "Synthesize the quasi-primal algebra of a poset");
    synth->add_option("poset", path, "Poset file")->required();
    synth->add_option("-o,--output", out, "Write the algebra file here");
    auto * homlattice = app.add_subcommand("homlattice", "Hom lattice of a quasi-primal algebra");
    homlattice->add_option("algebra", path, "Algebra file")->required();
    homlattice->add_flag("--assume-quasiprimal", assume, "Treat a foreign algebra as quasi-primal");
    auto * verify_cmd = app.add_subcommand("verify", "Run built-in verification suites");
    verify_cmd->add_option("suite", what, "roundtrip | figures | examples")->required()->check(CLI::IsMember({"roundtrip", "figures", "examples"}));
    verify_cmd->add_option("--fig2", fig2_path, "Poset file replacing the built-in Fig 2 poset");
    auto * con = app.add_subcommand("con", "Congruence lattice");
    con->add_option("algebra", path, "Algebra file")->required();
    auto * hom = app.add_subcommand("hom", "Find or count homomorphisms A -> B");
    hom->add_option("source", path, "Algebra file A")->required();
    hom->add_option("target", path2, "Algebra file B")->required();
    hom->add_flag("--count", count, "Count all homomorphisms");
    auto * core = app.add_subcommand("core", "Core (minimal retract) of an algebra");
    core->add_option("algebra", path, "Algebra file")->required();
    auto * fixture = app.add_subcommand("fixture", "Print a built-in fixture file");
    fixture->add_option("name", name, "Fixture name");
    fixture->add_flag("--list", list, "List fixtures");

    for (auto * sub : {forest, synth, homlattice, verify_cmd, con, hom, core, fixture})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? Ok : Usage;
    }

    try {
        if (*forest)
            return cmd_forest(path, g);
        if (*synth)
            return cmd_synth(path, out, g);
        if (*homlattice)
            return cmd_homlattice(path, assume, g);
        if (*verify_cmd)
            return cmd_verify(what, fig2_path, g);
        if (*con)
            return cmd_con(path, g);
        if (*hom)
            return cmd_hom(path, path2, count, g);
        if (*core)
            return cmd_core(path, g);
        if (*fixture)
            return cmd_fixture(name, list);
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::BudgetExceeded:
            return Budget;
        case ErrorKind::NoTopInP:
            return NoTop;
        default:
            return Usage;
        }
    }
    catch (const std::exception & e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return Mismatch;
    }
    return Usage;
}
