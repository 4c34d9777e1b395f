#include "eitspec/scenarios.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "eitspec/errors.hpp"
#include "test_support.hpp"

namespace eitspec {
namespace {

namespace fs = std::filesystem;
using testing::rel_err;

const LineControl& control_for(const ScenarioConfig& cfg, std::string_view line) {
    auto it = std::find_if(cfg.controls.begin(), cfg.controls.end(),
                           [&](const LineControl& c) { return c.selector == line; });
    EXPECT_NE(it, cfg.controls.end()) << line;
    return *it;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TEST(BundledScenarios, ListIsSortedAndComplete) {
    const auto a = list_scenarios();
    const auto b = list_scenarios();
    std::vector<std::string> names;
    for (const auto& s : a) names.push_back(s.name);
    EXPECT_EQ(names, (std::vector<std::string>{"cl2-inter", "cl2-intra", "fig4-two-lines", "fig5-congested",
                                               "methanol"}));
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].description, b[i].description);
    EXPECT_NE(a.back().description.find("249.291"), std::string::npos);
}

TEST(BundledScenarios, UnknownNameListsAvailable) {
    try {
        bundled_scenario("nosuch");
        FAIL();
    } catch (const UnknownScenarioError& e) {
        EXPECT_NE(std::string(e.what()).find("fig4-two-lines"), std::string::npos);
    }
}

TEST(BundledScenarios, Cl2Parameters) {
    const auto intra = bundled_scenario("cl2-intra");
    const auto& p5 = control_for(intra, "35Cl2/P5 v1-9");
    EXPECT_EQ(p5.field.omega_c.cm1, 13286.0);
    EXPECT_EQ(p5.field.detuning().cm1, 20.0);
    const auto inter = bundled_scenario("cl2-inter");
    const auto& r59 = control_for(inter, "35Cl2/R59 v2-9");
    EXPECT_EQ(r59.field.omega_es.cm1, 13286.0);
    EXPECT_EQ(r59.field.detuning().cm1, 0.0);
    EXPECT_EQ(control_for(inter, "35Cl37Cl/P28 v1-9").field.detuning().cm1, 9.0);
}

TEST(RunScenario, TwoLines) {
    const auto r = run_scenario(bundled_scenario("fig4-two-lines"));
    const auto* b = r.spectrum.find("B/line");
    ASSERT_NE(b, nullptr);
    const std::size_t k = nearest_index(r.spectrum.energies, Wavenumber{100.0});
    EXPECT_LT(rel_err(r.spectrum.total[k], b->values[k]), 1e-9);
    ASSERT_TRUE(r.metrics.b_peak_shift);
    EXPECT_LE(std::abs(*r.metrics.b_peak_shift), 0.02);
    ASSERT_TRUE(r.metrics.at_separation);
    EXPECT_NEAR(*r.metrics.at_separation, 5.0, 0.02);
    EXPECT_EQ(r.report.find("A/line")->verdict, Verdict::Eliminated);
}

TEST(RunScenario, CongestedZeroRabiIsSumOfLorentzians) {
    const auto cfg = with_rabi(bundled_scenario("fig5-congested"), Wavenumber{0.0});
    const auto r = run_scenario(cfg);
    for (std::size_t k = 0; k < r.spectrum.energies.size(); k += 97) {
        double sum = 0.0;
        for (const auto& l : r.catalog.lines) sum += lorentzian(r.spectrum.energies[k], l);
        EXPECT_LT(rel_err(r.spectrum.total[k], sum), 1e-12);
    }
}

TEST(RunScenario, CongestedResidualDecreases) {
    const auto base = bundled_scenario("fig5-congested");
    double prev = run_scenario(with_rabi(base, Wavenumber{0.0})).metrics.residual;
    for (double om : {2.0, 4.0, 6.0}) {
        const double r = run_scenario(with_rabi(base, Wavenumber{om})).metrics.residual;
        EXPECT_LT(r, prev) << om;
        prev = r;
    }
}

TEST(RunScenario, Cl2InterVerdicts) {
    const auto r = run_scenario(bundled_scenario("cl2-inter"));
    EXPECT_EQ(r.report.find("35Cl2/R59 v2-9")->verdict, Verdict::Eliminated);
    const auto* p28 = r.report.find("35Cl37Cl/P28 v1-9");
    EXPECT_EQ(p28->verdict, Verdict::Untouched);
    EXPECT_DOUBLE_EQ(p28->ratio, 900.0);
}

TEST(RunScenario, MethanolVerdicts) {
    const auto r = run_scenario(bundled_scenario("methanol"));
    EXPECT_EQ(r.report.count(Verdict::Eliminated), 1u);
    EXPECT_EQ(r.report.count(Verdict::Untouched), 3u);
}

TEST(RunScenario, OutputsAreByteIdentical) {
    const auto base = fs::temp_directory_path() / "eitspec_scenarios_test";
    for (const auto& info : list_scenarios()) {
        const auto cfg = bundled_scenario(info.name);
        write_outputs(run_scenario(cfg), base / "a" / info.name);
        write_outputs(run_scenario(cfg), base / "b" / info.name);
        for (const char* f : {"spectrum.csv", "report.csv"}) {
            const auto x = slurp(base / "a" / info.name / f);
            EXPECT_FALSE(x.empty());
            EXPECT_EQ(x, slurp(base / "b" / info.name / f)) << info.name << '/' << f;
        }
    }
}

TEST(ParseScenario, MinimalConfigUsesAutoGrid) {
    const auto cfg = parse_scenario(R"({"name": "m", "catalog": "fig4_two_lines", "controls": []})");
    EXPECT_TRUE(cfg.grid.automatic);
    EXPECT_EQ(cfg.probe_amp, 1.0);
    const auto r = run_scenario(cfg);
    EXPECT_FALSE(r.spectrum.energies.empty());
}

TEST(ParseScenario, SchemaErrors) {
    const std::string ok_head = R"({"name": "m", "catalog": "fig4_two_lines", )";
    EXPECT_THROW(parse_scenario("{not json"), ParseError);
    EXPECT_THROW(parse_scenario(R"({"catalog": "fig4_two_lines"})"), ParseError);
    EXPECT_THROW(parse_scenario(ok_head + R"("controls": [], "bogus": 1})"), ParseError);
    EXPECT_THROW(parse_scenario(ok_head + R"("controls": [{"line": "A/line", "rabi_cm1": 1}]})"), ParseError);
    EXPECT_THROW(parse_scenario(ok_head +
                                R"("controls": [{"line": "A/line", "omega_c_cm1": 1, "rabi_cm1": -1, "omega_es_cm1": 1}]})"),
                 ParseError);
    EXPECT_THROW(parse_scenario(ok_head + R"("controls": [], "grid": {"center_cm1": 1}})"), ParseError);
    EXPECT_THROW(parse_scenario(ok_head + R"("controls": [], "grid": "fine"})"), ParseError);
    EXPECT_THROW(parse_scenario(ok_head + R"("controls": "none"})"), ParseError);
}

TEST(ParseScenario, MissingMetricLineReported) {
    const auto cfg = parse_scenario(
        R"({"name": "m", "catalog": "fig4_two_lines", "controls": [], "metrics": {"b_line": "Z/none"}})");
    EXPECT_THROW(run_scenario(cfg), Error);
}

TEST(ParseScenario, CatalogRelativeToConfigFile) {
    const auto dir = fs::temp_directory_path() / "eitspec_scenario_rel";
    fs::create_directories(dir);
    std::ofstream(dir / "lines.csv") << "species,branch,omega_ge_cm1,gamma_cm1,strength\nQ,a,10,1,1\n";
    std::ofstream(dir / "s.json") << R"({"name": "rel", "catalog": "lines.csv", "controls": [],
        "grid": {"center_cm1": 10, "halfwidth_cm1": 5, "step_cm1": 0.5}})";
    const auto r = run_scenario(load_scenario_file(dir / "s.json"));
    EXPECT_EQ(r.spectrum.energies.size(), 21u);
    EXPECT_EQ(r.spectrum.total[10], 1.0);
}

TEST(SerializeSpectrum, HeaderAndRows) {
    const auto r = run_scenario(bundled_scenario("fig4-two-lines"));
    const auto text = serialize_spectrum(r.spectrum);
    EXPECT_EQ(text.substr(0, text.find('\n')), "energy_cm1,total,A/line,B/line");
    EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')),
              r.spectrum.energies.size() + 1);
}

TEST(Helpers, NearestIndexAndLocalMaxima) {
    const std::vector<Wavenumber> e{Wavenumber{0.0}, Wavenumber{1.0}, Wavenumber{2.0}};
    EXPECT_EQ(nearest_index(e, Wavenumber{0.5}), 0u);
    EXPECT_EQ(nearest_index(e, Wavenumber{1.6}), 2u);
    EXPECT_EQ(nearest_index(e, Wavenumber{-9.0}), 0u);
    const std::vector<double> v{0, 2, 1, 3, 3, 0};
    EXPECT_EQ(local_maxima(v), (std::vector<std::size_t>{1, 3}));
}

}  // namespace
}  // namespace eitspec
