#pragma once

#include <homlat/algebra.hpp>
#include <homlat/error.hpp>
#include <homlat/forest.hpp>
#include <homlat/poset.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace homlat::io {

using ordered_json = nlohmann::ordered_json;

/// Value of the "generator" key written by the synthesizer.
inline constexpr const char * kSynthMarker = "homlat-synth";

struct AlgebraFile {
    FiniteAlgebra algebra;
    /// Optional element labels; empty when absent.
    std::vector<std::string> elements;
    std::string generator;

    bool synthesized() const { return generator == kSynthMarker; }
};

struct PosetFile {
    Poset poset;
};

namespace detail {

[[noreturn]] inline void fail(const std::string & where, const std::string & what)
{
    throw Error(ErrorKind::Parse, where + ": " + what);
}

inline ordered_json parse_text(const std::string & text)
{
    try {
        return ordered_json::parse(text);
    }
    catch (const nlohmann::json::parse_error & e) {
        // byte offset to line:column
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            }
            else
                ++col;
        }
        fail("line " + std::to_string(line) + ", column " + std::to_string(col), "malformed JSON");
    }
}

inline std::size_t get_index(const ordered_json & j, const std::string & where)
{
    if (! j.is_number_integer() || j.get<long long>() < 0)
        fail(where, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

inline const ordered_json & field(const ordered_json & obj, const char * key, const std::string & where)
{
    if (! obj.is_object())
        fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        fail(where, std::string("missing field \"") + key + "\"");
    return *it;
}

inline std::string json_string(const std::string & s) { return ordered_json(s).dump(); }

} // namespace detail

inline AlgebraFile parse_algebra(const std::string & text)
{
    auto j = detail::parse_text(text);
    AlgebraFile f;
    const auto & size_j = detail::field(j, "size", "algebra");
    const std::size_t size = detail::get_index(size_j, "size");
    const auto & ops_j = detail::field(j, "ops", "algebra");
    if (! ops_j.is_array())
        detail::fail("ops", "expected an array");
    std::vector<OpSymbol> ops;
    std::vector<std::vector<std::size_t>> tables;
    for (std::size_t i = 0; i < ops_j.size(); ++i) {
        const std::string where = "ops[" + std::to_string(i) + "]";
        const auto & name = detail::field(ops_j[i], "name", where);
        if (! name.is_string())
            detail::fail(where + ".name", "expected a string");
        auto arity = detail::get_index(detail::field(ops_j[i], "arity", where), where + ".arity");
        const auto & table = detail::field(ops_j[i], "table", where);
        if (! table.is_array())
            detail::fail(where + ".table", "expected an array");
        std::vector<std::size_t> t;
        for (std::size_t k = 0; k < table.size(); ++k)
            t.push_back(detail::get_index(table[k], where + ".table[" + std::to_string(k) + "]"));
        ops.push_back({name.get<std::string>(), arity});
        tables.push_back(std::move(t));
    }
    std::string name;
    if (auto it = j.find("name"); it != j.end()) {
        if (! it->is_string())
            detail::fail("name", "expected a string");
        name = it->get<std::string>();
    }
    if (auto it = j.find("generator"); it != j.end() && it->is_string())
        f.generator = it->get<std::string>();
    if (auto it = j.find("elements"); it != j.end()) {
        if (! it->is_array() || it->size() != size)
            detail::fail("elements", "expected " + std::to_string(size) + " labels");
        for (auto & e : *it) {
            if (! e.is_string())
                detail::fail("elements", "labels must be strings");
            f.elements.push_back(e.get<std::string>());
        }
    }
    f.algebra = make_algebra(size, Signature(std::move(ops)), std::move(tables), std::move(name));
    return f;
}

/// Canonical form: fixed key order, one op per line.
inline std::string write_algebra(const AlgebraFile & f)
{
    const auto & a = f.algebra;
    std::ostringstream os;
    os << "{\n";
    if (! a.name().empty())
        os << "  \"name\": " << detail::json_string(a.name()) << ",\n";
    if (! f.generator.empty())
        os << "  \"generator\": " << detail::json_string(f.generator) << ",\n";
    os << "  \"size\": " << a.size() << ",\n";
    if (! f.elements.empty()) {
        ordered_json e = f.elements;
        os << "  \"elements\": " << e.dump() << ",\n";
    }
    os << "  \"ops\": [";
    for (std::size_t i = 0; i < a.num_ops(); ++i) {
        ordered_json op;
        op["name"] = a.signature()[i].name;
        op["arity"] = a.arity(i);
        op["table"] = a.table(i);
        os << (i ? ",\n    " : "\n    ") << op.dump();
    }
    os << (a.num_ops() ? "\n  ]\n" : "]\n") << "}\n";
    return os.str();
}

inline std::string write_algebra(const FiniteAlgebra & a) { return write_algebra(AlgebraFile{a, {}, {}}); }

inline PosetFile parse_poset(const std::string & text, CoverMode mode = CoverMode::Strict)
{
    auto j = detail::parse_text(text);
    const auto & el = detail::field(j, "elements", "poset");
    if (! el.is_array())
        detail::fail("elements", "expected an array");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < el.size(); ++i) {
        if (! el[i].is_string())
            detail::fail("elements[" + std::to_string(i) + "]", "expected a string");
        names.push_back(el[i].get<std::string>());
    }
    const auto & cv = detail::field(j, "covers", "poset");
    if (! cv.is_array())
        detail::fail("covers", "expected an array");
    std::vector<Cover> covers;
    for (std::size_t i = 0; i < cv.size(); ++i) {
        const std::string where = "covers[" + std::to_string(i) + "]";
        if (! cv[i].is_array() || cv[i].size() != 2)
            detail::fail(where, "expected [lowerIndex, upperIndex]");
        auto lo = detail::get_index(cv[i][0], where + "[0]");
        auto hi = detail::get_index(cv[i][1], where + "[1]");
        if (lo >= names.size() || hi >= names.size())
            detail::fail(where, "index out of range");
        covers.push_back({lo, hi});
    }
    return {Poset::from_covers(std::move(names), std::move(covers), mode)};
}

/// Canonical form: covers sorted.
inline std::string write_poset(const Poset & p)
{
    auto covers = p.covers();
    std::sort(covers.begin(), covers.end());
    std::ostringstream os;
    ordered_json names = p.names();
    os << "{\n  \"elements\": " << names.dump() << ",\n  \"covers\": [";
    for (std::size_t i = 0; i < covers.size(); ++i)
        os << (i ? ", " : "") << "[" << covers[i].first << ", " << covers[i].second << "]";
    os << "]\n}\n";
    return os.str();
}

inline std::string read_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Hasse diagram, bottom to top, one rank per height, edges lower → upper.
inline std::string to_dot(const Poset & p, const std::string & graph_name = "P")
{
    std::ostringstream os;
    os << "digraph " << detail::json_string(graph_name) << " {\n  rankdir=BT;\n  node [shape=box];\n";
    std::map<std::size_t, std::vector<std::size_t>> ranks;
    for (std::size_t x = 0; x < p.size(); ++x) {
        os << "  n" << x << " [label=" << detail::json_string(p.name(x)) << "];\n";
        ranks[p.height(x)].push_back(x);
    }
    for (auto & [h, xs] : ranks) {
        os << "  { rank=same;";
        for (auto x : xs)
            os << " n" << x << ";";
        os << " }\n";
    }
    auto covers = p.covers();
    std::sort(covers.begin(), covers.end());
    for (auto [lo, hi] : covers)
        os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace homlat::io
