#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "generators.hpp"
#include "oracle.hpp"
#include "stringy/config_io.hpp"

namespace stringy {
namespace {

using P = BivariatePolynomial;
using nlohmann::json;

bool has_code(const ValidationReport &r, const std::string &code) {
  for (const auto &f : r.findings)
    if (f.code == code) return true;
  return false;
}

ResolutionConfig two_curves() {
  // Two P^2's meeting in a line, on a 3-fold.
  ResolutionConfig cfg;
  cfg.dimension = 3;
  cfg.ambient = hd_projective_space(3).poly;
  cfg.components = {{"A", 1}, {"B", 2}};
  cfg.strata = {{0b01, hd_projective_space(2).poly}, {0b10, hd_projective_space(2).poly},
                {0b11, hd_projective_space(1).poly}};
  return cfg;
}

TEST(Config, LabelsAndKeys) {
  const auto cfg = two_curves();
  EXPECT_EQ(cfg.index_of("B"), 1U);
  EXPECT_EQ(cfg.subset_of({"B", "A"}), 0b11U);
  EXPECT_EQ(cfg.key_of(0b11), "A,B");
  EXPECT_EQ(cfg.all_components(), 0b11U);
  EXPECT_THROW(cfg.index_of("C"), ConfigError);
  EXPECT_THROW(cfg.subset_of({"A", "A"}), ConfigError);
  EXPECT_EQ(subset_size(0b1011), 3);
}

TEST(Config, ConversionByHand) {
  const auto open = convert_strata(two_curves(), StrataConvention::open);
  EXPECT_EQ(open.convention, StrataConvention::open);
  // P^2 minus a line is A^2; the line stays.
  EXPECT_EQ(open.stratum(0b01), P::t_power(2));
  EXPECT_EQ(open.stratum(0b10), P::t_power(2));
  EXPECT_EQ(open.stratum(0b11), hd_projective_space(1).poly);
  const auto back = convert_strata(open, StrataConvention::closed);
  EXPECT_EQ(back.strata, two_curves().strata);
}

TEST(Config, ConversionMatchesMoebiusOracle) {
  gen::Rng rng(3);
  for (int round = 0; round < 200; ++round) {
    const auto cfg = gen::lenient_config(rng);
    const auto open = convert_strata(cfg, StrataConvention::open);
    const auto closed = convert_strata(cfg, StrataConvention::closed);
    const auto open_ref = oracle::open_strata(cfg);
    const auto closed_ref = oracle::closed_strata(cfg);
    for (Subset s = 1; s < open_ref.size(); ++s) {
      ASSERT_EQ(open.stratum(s), open_ref[s]) << "round " << round << " subset " << s;
      ASSERT_EQ(closed.stratum(s), closed_ref[s]) << "round " << round << " subset " << s;
    }
    EXPECT_EQ(convert_strata(open, StrataConvention::closed).strata, closed.strata);
  }
}

TEST(Config, ExceptionalTotal) {
  // D = two P^2's glued along a line: 2(1 + t + t^2) - (1 + t).
  EXPECT_EQ(exceptional_total_hd(two_curves()), (P{{0, 0, 1}, {1, 1, 1}, {2, 2, 2}}));
  EXPECT_EQ(component_closed_hd(two_curves(), "A").poly, hd_projective_space(2).poly);
  EXPECT_EQ(component_closed_hd(two_curves(), "A").claimed_dimension, 2U);
}

TEST(Config, SubsetsBelowKeys) {
  auto subsets = subsets_below_keys(two_curves());
  std::sort(subsets.begin(), subsets.end());
  EXPECT_EQ(subsets, (std::vector<Subset>{1, 2, 3}));
}

TEST(Config, DiscrepancyFloor) {
  EXPECT_EQ(discrepancy_floor(3), -1);
  EXPECT_EQ(discrepancy_floor(4), 0);
  EXPECT_EQ(discrepancy_floor(5), 0);
  EXPECT_EQ(discrepancy_floor(6), 1);
  EXPECT_EQ(discrepancy_floor(9), 2);
}

TEST(Validation, AcceptsWellFormedConfigs) {
  EXPECT_TRUE(validate(two_curves(), ValidationMode::lenient).ok());
  EXPECT_TRUE(validate(two_curves(), ValidationMode::strict).ok());
}

TEST(Validation, LenientFindings) {
  auto cfg = two_curves();
  cfg.components[1].discrepancy = -1;
  EXPECT_TRUE(has_code(validate(cfg, ValidationMode::lenient), "component.discrepancy"));

  cfg = two_curves();
  cfg.components[1].label = "A";
  EXPECT_TRUE(has_code(validate(cfg, ValidationMode::lenient), "component.label"));

  cfg = two_curves();
  cfg.ambient.add_term({1, 0}, 1);
  EXPECT_TRUE(has_code(validate(cfg, ValidationMode::lenient), "strata.symmetry"));

  cfg = two_curves();
  cfg.strata.erase(0b10);
  EXPECT_TRUE(has_code(validate(cfg, ValidationMode::lenient), "strata.absent"));
  cfg.convention = StrataConvention::open;
  EXPECT_TRUE(validate(cfg, ValidationMode::lenient).ok());

  cfg = two_curves();
  cfg.strata[0b100] = P::constant(1);
  EXPECT_TRUE(has_code(validate(cfg, ValidationMode::lenient), "strata.key"));

  cfg = two_curves();
  for (int k = 0; k < 30; ++k) cfg.components.push_back({"X" + std::to_string(k), 1});
  EXPECT_TRUE(has_code(validate(cfg, ValidationMode::lenient), "config.components"));
  EXPECT_TRUE(validate(cfg, ValidationMode::lenient, {40}).ok());
}

TEST(Validation, StrictFindings) {
  auto cfg = two_curves();
  cfg.dimension = 2;
  EXPECT_TRUE(validate(cfg, ValidationMode::lenient).ok());
  EXPECT_TRUE(has_code(validate(cfg, ValidationMode::strict), "strict.dimension"));

  cfg = two_curves();
  cfg.dimension = 6;
  cfg.ambient = hd_projective_space(6).poly;
  cfg.strata = {{0b01, hd_projective_space(5).poly}, {0b10, hd_projective_space(5).poly},
                {0b11, hd_projective_space(4).poly}};
  cfg.components[0].discrepancy = 1;  // floor((6-4)/2) = 1
  const auto r = validate(cfg, ValidationMode::strict);
  ASSERT_TRUE(has_code(r, "strict.discrepancy"));
  bool mentions = false;
  for (const auto &f : r.findings) mentions = mentions || f.message.find("discrepancy bound violated") != std::string::npos;
  EXPECT_TRUE(mentions);
  EXPECT_TRUE(validate(cfg, ValidationMode::lenient).ok());

  cfg = two_curves();
  cfg.strata[0b01] = P::t_power(2);  // not Serre-symmetric as a surface
  const auto s = validate(cfg, ValidationMode::strict);
  ASSERT_TRUE(has_code(s, "strict.serre"));
  EXPECT_NE(s.findings.front().message.find("necessary condition only"), std::string::npos);
  EXPECT_THROW(require_valid(cfg, ValidationMode::strict), ValidationError);
  EXPECT_NO_THROW(require_valid(cfg, ValidationMode::lenient));
}

TEST(Validation, GeneratedConfigsAreValid) {
  gen::Rng rng(5);
  for (int round = 0; round < 100; ++round) {
    EXPECT_TRUE(validate(gen::lenient_config(rng), ValidationMode::lenient).ok()) << round;
    const auto d = static_cast<Exponent>(3 + round % 4);
    const auto strict = gen::strict_config(rng, d, round % 2 == 0);
    const auto report = validate(strict, ValidationMode::strict);
    EXPECT_TRUE(report.ok()) << round << ": " << (report.ok() ? "" : report.findings.front().message);
  }
}

TEST(ConfigJson, ParsesFixture) {
  const auto cfg = load_config(STRINGY_FIXTURE_DIR "/node_a1.json");
  EXPECT_EQ(cfg.dimension, 3U);
  ASSERT_EQ(cfg.components.size(), 1U);
  EXPECT_EQ(cfg.components[0].discrepancy, 1);
  EXPECT_EQ(cfg.stratum(1), (P{{0, 0, 1}, {1, 1, 2}, {2, 2, 1}}));
  ASSERT_TRUE(cfg.singular_locus.has_value());
  EXPECT_EQ(*cfg.singular_locus, P::constant(1));
}

TEST(ConfigJson, RoundTrip) {
  gen::Rng rng(9);
  for (int round = 0; round < 50; ++round) {
    const auto cfg = gen::lenient_config(rng);
    const json j = config_to_json(cfg);
    const auto again = config_from_json(j);
    EXPECT_EQ(again.strata, cfg.strata);
    EXPECT_EQ(again.ambient, cfg.ambient);
    EXPECT_EQ(config_to_json(again).dump(), j.dump());
  }
}

TEST(ConfigJson, Rejections) {
  const json base = json::parse(R"({"dimension": 3, "ambient": [[0,0,1]],
    "components": [{"label": "E", "discrepancy": 1}], "strata": {"E": [[0,0,1]]}})");
  EXPECT_NO_THROW(config_from_json(base));

  auto bad = base;
  bad["colour"] = "red";
  EXPECT_THROW(config_from_json(bad), ConfigError);
  bad = base;
  bad["components"][0]["discrepancy"] = 0.5;
  EXPECT_THROW(config_from_json(bad), ConfigError);
  bad = base;
  bad["strata"]["F"] = json::array();
  EXPECT_THROW(config_from_json(bad), ConfigError);
  bad = base;
  bad["ambient"] = json::parse("[[0,0,1],[0,0,2]]");
  EXPECT_THROW(config_from_json(bad), ConfigError);
  bad = base;
  bad["ambient"] = json::parse("[[0,0,0]]");
  EXPECT_THROW(config_from_json(bad), ConfigError);
  bad = base;
  bad["ambient"] = json::parse("[[-1,0,1]]");
  EXPECT_THROW(config_from_json(bad), ConfigError);
  bad = base;
  bad["strata_convention"] = "sideways";
  EXPECT_THROW(config_from_json(bad), ConfigError);
  bad = base;
  bad.erase("dimension");
  EXPECT_THROW(config_from_json(bad), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError);
}

TEST(ConfigJson, BigIntegersAsStrings) {
  const Integer big = Integer(1) << 80;
  const json j = integer_to_json(big);
  ASSERT_TRUE(j.is_string());
  EXPECT_EQ(integer_from_json(j, "x"), big);
  EXPECT_TRUE(integer_to_json(Integer(-5)).is_number_integer());
  EXPECT_EQ(integer_from_json(json("-12345678901234567890123"), "x"), Integer("-12345678901234567890123"));
  EXPECT_THROW(integer_from_json(json("12x"), "x"), ConfigError);
  EXPECT_THROW(integer_from_json(json(1.5), "x"), ConfigError);

  const P p = P::monomial(1, 1, big);
  EXPECT_EQ(polynomial_from_json(polynomial_to_json(p), "p"), p);
}

TEST(ConfigJson, RationalLiteral) {
  const json j = json::parse(R"({"num": [[0,0,1],[1,1,1]], "den": [2]})");
  const auto x = rational_from_json(j, "x");
  EXPECT_EQ(x, StringyRational::normalized(P::constant(1), CycloProduct({1})));
  EXPECT_EQ(rational_from_json(rational_to_json(x), "x"), x);
}

}  // namespace
}  // namespace stringy
