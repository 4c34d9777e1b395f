#include "eitspec/catalog.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <limits>

#include "eitspec/errors.hpp"

namespace eitspec {
namespace {

constexpr const char* kOneLine =
    "# demo\n"
    "species,branch,omega_ge_cm1,gamma_cm1,strength\n"
    "X,R1,100.5,0.01,2\n";

TEST(ParseLinelist, SingleRow) {
    const auto cat = parse_linelist(kOneLine);
    ASSERT_EQ(cat.size(), 1u);
    EXPECT_EQ(cat.lines[0].label(), "X/R1");
    EXPECT_EQ(cat.lines[0].omega_ge.cm1, 100.5);
    EXPECT_EQ(cat.lines[0].gamma.cm1, 0.01);
    EXPECT_EQ(cat.lines[0].strength, 2.0);
}

TEST(ParseLinelist, CrlfAndBlankLines) {
    const auto cat = parse_linelist("species,branch,omega_ge_cm1,gamma_cm1,strength\r\n\r\nX,a,1,1,1\r\n");
    EXPECT_EQ(cat.size(), 1u);
}

TEST(ParseLinelist, ZeroWidthRejectedWithLocation) {
    try {
        parse_linelist("species,branch,omega_ge_cm1,gamma_cm1,strength\nX,a,1,0,1\n", "t.csv");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("t.csv: row 2"), std::string::npos) << msg;
        EXPECT_NE(msg.find("gamma_cm1"), std::string::npos) << msg;
    }
}

TEST(ParseLinelist, Errors) {
    const std::string h = "species,branch,omega_ge_cm1,gamma_cm1,strength\n";
    EXPECT_THROW(parse_linelist(h + "X,a,1,1\n"), ParseError);              // missing column
    EXPECT_THROW(parse_linelist(h + "X,a,1,1,1,9\n"), ParseError);          // extra column
    EXPECT_THROW(parse_linelist(h + "X,a,abc,1,1\n"), ParseError);          // non-numeric
    EXPECT_THROW(parse_linelist(h + "X,a,1,-0.1,1\n"), ParseError);         // negative width
    EXPECT_THROW(parse_linelist(h + "X,a,1,1,-1\n"), ParseError);           // negative strength
    EXPECT_THROW(parse_linelist(h + "X,a,inf,1,1\n"), ParseError);          // non-finite
    EXPECT_THROW(parse_linelist(h + "X,a,1,1,1\nX,a,2,1,1\n"), ParseError); // duplicate label
    EXPECT_THROW(parse_linelist("species,branch,omega,gamma_cm1,strength\n"), ParseError);
    EXPECT_THROW(parse_linelist("# only a comment\n"), ParseError);
}

TEST(ParseLinelist, SerializeRoundTripIsIdempotent) {
    const auto first = parse_linelist(
        "species,branch,omega_ge_cm1,gamma_cm1,strength\n"
        "A,x,0.1,0.3,0.7\nB,y,13119.123456789012,1e-5,1e3\nC,z,-2.5e-8,7,0\n");
    const std::string text = serialize_linelist(first);
    const auto second = parse_linelist(text);
    EXPECT_EQ(serialize_linelist(second), text);
    ASSERT_EQ(second.size(), first.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        EXPECT_EQ(second.lines[i].omega_ge, first.lines[i].omega_ge);
        EXPECT_EQ(second.lines[i].gamma, first.lines[i].gamma);
        EXPECT_EQ(second.lines[i].strength, first.lines[i].strength);
        EXPECT_EQ(second.lines[i].label(), first.lines[i].label());
    }
}

TEST(BundledCatalog, Cl2TableFrequencies) {
    const auto cat = bundled_catalog("cl2_table1.csv");
    const double want[] = {1.312e4, 1.312e4, 1.312e4, 1.3122e4, 1.322e4, 1.3119e4, 1.3119e4};
    ASSERT_EQ(cat.size(), 7u);
    for (std::size_t i = 0; i < 7; ++i) {
        EXPECT_EQ(cat.lines[i].omega_ge.cm1, want[i]);
        EXPECT_EQ(cat.lines[i].gamma.cm1, 0.01);
        EXPECT_EQ(cat.lines[i].strength, 1.0);
    }
    EXPECT_NE(cat.find("35Cl2/R59 v2-9"), nullptr);
    EXPECT_NE(cat.find("35Cl37Cl/P28 v1-9"), nullptr);
}

TEST(BundledCatalog, MethanolTableFrequencies) {
    const auto cat = bundled_catalog("methanol_table2");
    const double want[] = {231.14691, 231.14924, 231.15178, 231.15353};
    ASSERT_EQ(cat.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(cat.lines[i].omega_ge.cm1, want[i]);
}

TEST(BundledCatalog, NamesAndUnknown) {
    const auto names = bundled_catalog_names();
    EXPECT_NE(std::find(names.begin(), names.end(), "cl2_table1"), names.end());
    EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
    EXPECT_THROW(bundled_catalog("nope"), ParseError);
}

TEST(LoadCatalog, FileRelativeToBaseDir) {
    const auto dir = std::filesystem::temp_directory_path() / "eitspec_catalog_test";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "mine.csv") << kOneLine;
    EXPECT_EQ(load_catalog("mine.csv", dir).size(), 1u);
    EXPECT_EQ(load_catalog((dir / "mine.csv").string()).size(), 1u);
    EXPECT_THROW(load_catalog("missing.csv", dir), ParseError);
    EXPECT_EQ(load_catalog("fig4_two_lines").size(), 2u);
}

TEST(SelectWindow, Cl2ThreeOverlappingLines) {
    const auto cat = bundled_catalog("cl2_table1");
    const auto w = select_window(cat, Wavenumber{1.312e4}, Wavenumber{0.5});
    ASSERT_EQ(w.size(), 3u);
    EXPECT_EQ(w.lines[0].label(), "35Cl2/R59 v2-9");
    EXPECT_EQ(w.lines[1].label(), "35Cl37Cl/P28 v1-9");
    EXPECT_EQ(w.lines[2].label(), "35Cl2/P5 v1-9");
}

TEST(SelectWindow, EmptyAndIdentity) {
    const auto cat = bundled_catalog("cl2_table1");
    EXPECT_TRUE(select_window(cat, Wavenumber{500.0}, Wavenumber{1.0}).empty());
    const auto all = select_window(cat, Wavenumber{0.0}, Wavenumber{std::numeric_limits<double>::infinity()});
    EXPECT_EQ(serialize_linelist(all), serialize_linelist(cat));
    const auto span = select_window(cat, Wavenumber{13170.0}, Wavenumber{100.0});
    EXPECT_EQ(span.size(), cat.size());
    EXPECT_THROW(select_window(cat, Wavenumber{0.0}, Wavenumber{0.0}), DomainError);
}

TEST(RotationalEnergy, Formula) {
    const RotorConstants rc{Wavenumber{1.0}, Wavenumber{0.0}};
    EXPECT_EQ(rotational_energy(rc, 2).cm1, 6.0);
    const RotorConstants off{Wavenumber{0.24}, Wavenumber{3.5}};
    EXPECT_EQ(rotational_energy(off, 0).cm1, 3.5);
    EXPECT_THROW(rotational_energy(rc, -1), DomainError);
    EXPECT_THROW(rotational_energy(RotorConstants{Wavenumber{0.0}, {}}, 1), DomainError);
}

TEST(RotationalEnergy, SpacingLinearInJ) {
    const RotorConstants rc{Wavenumber{0.2438}, Wavenumber{17.0}};
    for (int j = 0; j < 120; ++j) {
        const double spacing = rotational_energy(rc, j + 1).cm1 - rotational_energy(rc, j).cm1;
        EXPECT_NEAR(spacing, 2.0 * 0.2438 * (j + 1), 1e-10);
    }
}

}  // namespace
}  // namespace eitspec
