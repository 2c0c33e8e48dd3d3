#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "lpk/catalog.hpp"

using namespace lpk;

TEST_CASE("bundled catalog loads with the documented shape") {
    std::vector<CatalogEntry> entries = catalog_bundled();
    CHECK(entries.size() >= 83);

    // ids unique
    std::set<int> ids;
    for (const CatalogEntry& e : entries) CHECK(ids.insert(e.id).second);

    // entry 7: known Poisson-center generators
    auto find = [&](int id) -> const CatalogEntry& {
        for (const CatalogEntry& e : entries)
            if (e.id == id) return e;
        throw std::runtime_error("missing entry");
    };
    const CatalogEntry& e7 = find(7);
    auto y7 = e7.doc["expected"]["Y"];
    REQUIRE(y7.size() == 3);
    CHECK(y7[0]["poly"] == "x4");
    CHECK(y7[1]["poly"] == "x5");
    CHECK(y7[2]["poly"] == "x3^2 + 2*x1*x5 - 2*x2*x4");

    // entry 157: the quadratic relation between the six generators
    const CatalogEntry& e157 = find(157);
    auto rel = e157.doc["expected"]["relations"];
    REQUIRE(rel.size() == 1);
    CHECK(rel[0] == "x7^2*f1 + x6^2*f2 - f3^2 + 2*x6*x7*f4");

    // the parametrized family instantiates once per sample value
    const CatalogEntry& e84 = find(84);
    auto insts = e84.instances();
    REQUIRE(insts.size() == 3);
    CHECK(insts[0].first == "lam=0");
    for (const auto& [label, L] : insts) CHECK(L.dim() == 7);
    // lam enters the [x1, x4] bracket
    VarSetPtr v = insts[1].second.vars();
    CHECK(insts[1].second.bracket_basis(0, 3) == poly_parse("2*x7 + x6", v));
    CHECK(insts[0].second.bracket_basis(0, 3) == poly_parse("x6", v));
}

TEST_CASE("every bundled entry constructs (Jacobi holds)") {
    for (const CatalogEntry& e : catalog_bundled())
        for (const auto& [label, L] : e.instances()) {
            CHECK(L.dim() == e.doc["dim"].get<std::size_t>());
        }
}

TEST_CASE("empty file gives an empty list") {
    std::string path = "lpk_empty_catalog_test.json";
    { std::ofstream out(path); }
    CHECK(catalog_load(path).empty());
    std::remove(path.c_str());
}

TEST_CASE("checksum manifest matches the data files") {
    ManifestStatus st = verify_catalog_manifest(bundled_catalog_dir());
    for (const std::string& p : st.problems) MESSAGE(p);
    CHECK(st.ok);
}

TEST_CASE("single entries verify end to end") {
    std::vector<CatalogEntry> entries = catalog_bundled();
    for (const CatalogEntry& e : entries) {
        if (e.id != 83 && e.id != 89) continue;
        VerificationReport rep = verify_entry(e, entry_seed(42, e.id));
        for (const ClaimRow& r : rep.rows)
            if (r.status == "fail") MESSAGE(e.id, " ", r.claim, ": ", r.detail);
        CHECK(rep.passed());
        CHECK(rep.rows.size() >= 8);
    }
}

TEST_CASE("a corrupted bracket fails exactly its own entry") {
    std::vector<CatalogEntry> entries = catalog_bundled();
    std::vector<CatalogEntry> two;
    for (CatalogEntry& e : entries)
        if (e.id == 83 || e.id == 88) two.push_back(e);
    REQUIRE(two.size() == 2);
    for (CatalogEntry& e : two)
        if (e.id == 83) e.doc["brackets"][0][2] = "x7";  // was [x1,x2] = x3
    VerificationSummary sum = verify_all(two, 42);
    CHECK(sum.failed_entries == 1);
    for (const VerificationReport& r : sum.reports) {
        if (r.id == 83) CHECK(r.failures() > 0);
        if (r.id == 88) CHECK(r.failures() == 0);
    }
}

TEST_CASE("isomorphic Poisson centers across the 83-87 group") {
    std::vector<CatalogEntry> entries = catalog_bundled();
    std::size_t seen = 0;
    for (const CatalogEntry& e : entries) {
        if (e.id < 83 || e.id > 87) continue;
        ++seen;
        auto y = e.doc["expected"]["Y"];
        REQUIRE(y.size() == 1);
        CHECK(y[0]["poly"] == "x7");
    }
    CHECK(seen == 5);
}

TEST_CASE("dual point parsing") {
    VarSetPtr v = VarSet::make({"x1", "x2", "x3"});
    DualPoint a = parse_dual_point("x2*", v);
    CHECK(a == DualPoint{Rat(0), Rat(1), Rat(0)});
    DualPoint b = parse_dual_point("1, -2/3, 0", v);
    CHECK(b[1] == Rat(-2, 3));
    CHECK_THROWS_AS(parse_dual_point("q*", v), CatalogError);
    CHECK_THROWS_AS(parse_dual_point("1,2", v), CatalogError);
}
