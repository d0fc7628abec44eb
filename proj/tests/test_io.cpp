#include "test_util.hpp"

#include <homlat/fixtures.hpp>
#include <homlat/io.hpp>
#include <homlat/verify.hpp>

#include <gtest/gtest.h>

using namespace homlat;

namespace {

std::string error_text(const std::function<void()> & f)
{
    try {
        f();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::Parse);
        return e.what();
    }
    ADD_FAILURE() << "no error";
    return {};
}

} // namespace

TEST(IO, AlgebraRoundTrip)
{
    for (auto & f : fixtures()) {
        if (! f.algebra)
            continue;
        auto text = io::write_algebra(*f.algebra);
        auto back = io::parse_algebra(text);
        EXPECT_EQ(back.algebra.signature(), f.algebra->signature());
        EXPECT_EQ(back.algebra.tables(), f.algebra->tables());
        EXPECT_EQ(back.algebra.name(), f.algebra->name());
        EXPECT_EQ(io::write_algebra(back), text) << f.name;
    }
}

TEST(IO, SynthesizedFileKeepsMarkerAndLabels)
{
    auto b = synthesize_quasiprimal(figure2_poset());
    io::AlgebraFile f{b.q, {}, io::kSynthMarker};
    for (std::size_t x = 0; x < b.q.size(); ++x)
        f.elements.push_back(b.label(x));
    auto back = io::parse_algebra(io::write_algebra(f));
    EXPECT_TRUE(back.synthesized());
    EXPECT_EQ(back.elements, f.elements);
    EXPECT_EQ(back.elements.back(), "T");
    EXPECT_FALSE(io::parse_algebra(io::write_algebra(pentagon_algebra())).synthesized());
}

TEST(IO, AlgebraErrors)
{
    auto msg = error_text([] { io::parse_algebra("{\n  \"size\": 2,\n  \"ops\": [ }"); });
    EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
    msg = error_text([] { io::parse_algebra(R"({"ops": []})"); });
    EXPECT_NE(msg.find("size"), std::string::npos);
    msg = error_text([] { io::parse_algebra(R"({"size": 2, "ops": [{"name": "f", "arity": 1, "table": [0, -1]}]})"); });
    EXPECT_NE(msg.find("ops[0].table[1]"), std::string::npos) << msg;
    msg = error_text([] { io::parse_algebra(R"({"size": 2, "ops": [{"name": 3, "arity": 1, "table": [0, 1]}]})"); });
    EXPECT_NE(msg.find("ops[0].name"), std::string::npos) << msg;
    error_text([] { io::parse_algebra(R"({"size": 2, "elements": ["a"], "ops": []})"); });
    // semantic errors keep their own kinds
    EXPECT_KIND(io::parse_algebra(R"({"size": 2, "ops": [{"name": "f", "arity": 1, "table": [0]}]})"), ErrorKind::TableLength);
    EXPECT_KIND(io::parse_algebra(R"({"size": 2, "ops": [{"name": "f", "arity": 1, "table": [0, 5]}]})"), ErrorKind::EntryRange);
}

TEST(IO, PosetRoundTrip)
{
    for (auto & p : poset_census(4)) {
        auto back = io::parse_poset(io::write_poset(p)).poset;
        EXPECT_EQ(back.names(), p.names());
        EXPECT_EQ(back.covers(), p.covers());
    }
    auto fig2 = io::parse_poset(io::read_file(std::string(HOMLAT_TEST_DATA) + "/fig2.json")).poset;
    EXPECT_TRUE(poset_iso(fig2, figure2_poset()));
    EXPECT_EQ(fig2.names(), figure2_poset().names());
}

TEST(IO, PosetErrors)
{
    error_text([] { io::parse_poset(R"({"elements": ["a"]})"); });
    error_text([] { io::parse_poset(R"({"elements": ["a", "b"], "covers": [[0, 2]]})"); });
    error_text([] { io::parse_poset(R"({"elements": ["a", "b"], "covers": [[0]]})"); });
    error_text([] { io::parse_poset(R"({"elements": [1], "covers": []})"); });
    EXPECT_KIND(io::parse_poset(R"({"elements": ["a", "b"], "covers": [[0, 1], [1, 0]]})"), ErrorKind::CyclicCovers);
    const char * redundant = R"({"elements": ["a", "b", "c"], "covers": [[0, 1], [1, 2], [0, 2]]})";
    EXPECT_KIND(io::parse_poset(redundant), ErrorKind::RedundantCover);
    EXPECT_EQ(io::parse_poset(redundant, CoverMode::Reduce).poset.covers().size(), 2U);
    EXPECT_KIND(io::read_file("/nonexistent/file.json"), ErrorKind::Parse);
}

TEST(IO, Dot)
{
    auto dot = io::to_dot(Poset::chain(2), "C2");
    EXPECT_EQ(dot,
        "digraph \"C2\" {\n  rankdir=BT;\n  node [shape=box];\n  n0 [label=\"0\"];\n  n1 [label=\"1\"];\n"
        "  { rank=same; n0; }\n  { rank=same; n1; }\n  n0 -> n1;\n}\n");
    auto d = io::to_dot(figure2_poset());
    EXPECT_NE(d.find("{ rank=same; n4; n5; }"), std::string::npos);
    EXPECT_NE(d.find("n5 -> n3;"), std::string::npos);
}

TEST(IO, FixtureLookup)
{
    EXPECT_TRUE(find_fixture("fig2-poset"));
    EXPECT_FALSE(find_fixture("nope"));
    auto f = find_fixture("fig6-pentagon");
    ASSERT_TRUE(f);
    EXPECT_EQ(io::read_file(std::string(HOMLAT_TEST_DATA) + "/pentagon.json"), f->text());
}

TEST(Verify, AllReportsPass)
{
    for (auto & r : {verify::figures(), verify::examples(), verify::roundtrip()})
        for (auto & c : r)
            EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
    EXPECT_EQ(verify::roundtrip().size(), 25U);
}

TEST(Verify, CorruptedFixtureFails)
{
    auto p = io::parse_poset(io::read_file(std::string(HOMLAT_TEST_DATA) + "/fig2_corrupted.json")).poset;
    auto r = verify::figures(p);
    EXPECT_FALSE(verify::all_pass(r));
    EXPECT_FALSE(r.front().pass);
    EXPECT_EQ(r.front().name, "fig2-forest");
}
