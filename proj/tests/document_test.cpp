#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ooc/designer.hpp"
#include "ooc/document.hpp"

namespace ooc {
namespace {

using nlohmann::json;

CodeSetDocument designed(const std::vector<CodeParams>& params) {
  DesignConfig config;
  config.parameter_list = params;
  const auto family = params.size() == 1 ? design_fixed(params.front()) : design_multi(config);
  return make_document(family, config);
}

bool has_failure(const VerificationReport& r, const std::string& invariant) {
  return std::any_of(r.checks.begin(), r.checks.end(), [&](const VerificationCheck& c) {
    return c.invariant == invariant && c.status != CheckStatus::kPass;
  });
}

CodeSetDocument tampered(const std::string& text, const std::function<void(json&)>& edit) {
  auto j = json::parse(text);
  edit(j);
  return from_json(j.dump(2) + "\n");
}

TEST(Document, JsonRoundTripIsByteIdentical) {
  const auto doc = designed({CodeParams{25, 3, 1, 1}});
  const auto text = to_json(doc);
  const auto back = from_json(text);
  EXPECT_EQ(back, doc);
  EXPECT_EQ(to_json(back), text);
  EXPECT_EQ(text.back(), '\n');
}

TEST(Document, CarriesProvenanceAndFamilyValue) {
  const auto doc = designed({CodeParams{25, 3, 1, 1}});
  EXPECT_EQ(doc.format_version, kFormatVersion);
  EXPECT_EQ(doc.provenance.tool, kToolName);
  EXPECT_EQ(doc.provenance.config.n, (std::vector<int>{25}));
  EXPECT_EQ(doc.family_interset_lambda, 2);
}

TEST(Document, StrictReading) {
  const auto text = to_json(designed({CodeParams{7, 3, 1, 1}}));
  EXPECT_THROW(from_json("not json"), DocumentError);
  EXPECT_THROW(tampered(text, [](json& j) { j["extra"] = 1; }), DocumentError);
  EXPECT_THROW(tampered(text, [](json& j) { j.erase("sets"); }), DocumentError);
  EXPECT_THROW(tampered(text, [](json& j) { j["format_version"] = "9.9"; }), DocumentError);
  EXPECT_THROW(tampered(text, [](json& j) { j["sets"][0]["codes"][0]["dopr"] = "1-2-4"; }), DocumentError);
  EXPECT_THROW(tampered(text, [](json& j) { j["sets"][0]["verified"] = true; }), DocumentError);
}

TEST(Document, CsvHoldsTheSameCodes) {
  const auto doc = designed({CodeParams{25, 3, 1, 1}});
  std::multiset<std::string> from_doc;
  for (std::size_t s = 0; s < doc.sets.size(); ++s) {
    for (const auto& c : doc.sets[s].codes) {
      std::string d, w;
      for (std::size_t i = 0; i < c.dopr.size(); ++i) d += (i ? "-" : "") + std::to_string(c.dopr[i]);
      for (std::size_t i = 0; i < c.wpr.size(); ++i) w += (i ? "-" : "") + std::to_string(c.wpr[i]);
      from_doc.insert(std::to_string(s) + ",25,3," + d + "," + w);
    }
  }
  std::istringstream csv(to_csv(doc));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "set_id,n,w,dopr,wpr");
  std::multiset<std::string> from_csv;
  while (std::getline(csv, line)) from_csv.insert(line);
  EXPECT_EQ(from_csv, from_doc);
}

TEST(Verify, DesignedDocumentsPass) {
  for (const auto& p : {CodeParams{13, 4, 1, 1}, CodeParams{7, 3, 1, 1}, CodeParams{25, 3, 1, 1}}) {
    const auto report = verify_document(designed({p}));
    EXPECT_TRUE(report.passed()) << report.render();
    EXPECT_FALSE(report.has_method_disagreement());
  }
  const auto multi = verify_document(designed({CodeParams{13, 4, 1, 1}, CodeParams{25, 3, 1, 1}}));
  EXPECT_TRUE(multi.passed()) << multi.render();
}

TEST(Verify, DoprNotSummingToLength) {
  const auto text = to_json(designed({CodeParams{25, 3, 1, 1}}));
  const auto doc = tampered(text, [](json& j) { j["sets"][0]["codes"][0]["dopr"][0] = 2; });
  const auto report = verify_document(doc);
  EXPECT_FALSE(report.passed());
  EXPECT_TRUE(has_failure(report, "dopr-sum"));
}

TEST(Verify, SharedDifferenceInUnitSet) {
  // (1,3,21) and (1,4,20) at n=25 both contain difference 1.
  const auto text = to_json(designed({CodeParams{25, 3, 1, 1}}));
  const auto doc = tampered(text, [](json& j) {
    j["sets"][0]["codes"] = json::array({json{{"dopr", {1, 3, 21}}, {"wpr", {0, 1, 4}}},
                                         json{{"dopr", {1, 4, 20}}, {"wpr", {0, 1, 5}}}});
  });
  const auto report = verify_document(doc);
  EXPECT_TRUE(has_failure(report, "intra-set-cross-correlation"));
  EXPECT_NE(report.render().find("share difference"), std::string::npos);
}

TEST(Verify, WprInconsistentWithDopr) {
  const auto text = to_json(designed({CodeParams{7, 3, 1, 1}}));
  const auto doc = tampered(text, [](json& j) { j["sets"][0]["codes"][0]["wpr"] = {0, 2, 3}; });
  EXPECT_TRUE(has_failure(verify_document(doc), "wpr-matches-dopr"));
}

TEST(Verify, NonStandardRotation) {
  const auto text = to_json(designed({CodeParams{7, 3, 1, 1}}));
  const auto doc = tampered(text, [](json& j) {
    j["sets"][0]["codes"][0] = json{{"dopr", {4, 1, 2}}, {"wpr", {0, 4, 5}}};
  });
  EXPECT_TRUE(has_failure(verify_document(doc), "standard-form"));
}

TEST(Verify, WrongFamilyValue) {
  const auto text = to_json(designed({CodeParams{25, 3, 1, 1}}));
  const auto doc = tampered(text, [](json& j) { j["family_interset_lambda"] = 1; });
  EXPECT_TRUE(has_failure(verify_document(doc), "family-interset-lambda"));
}

TEST(Verify, SetLargerThanBound) {
  const auto text = to_json(designed({CodeParams{13, 4, 1, 1}}));
  const auto doc = tampered(text, [](json& j) {
    j["sets"][0]["codes"] = json::array({json{{"dopr", {1, 2, 6, 4}}, {"wpr", {0, 1, 3, 9}}},
                                         json{{"dopr", {1, 3, 2, 7}}, {"wpr", {0, 1, 4, 6}}}});
  });
  EXPECT_TRUE(has_failure(verify_document(doc), "set-size-bound"));
}

TEST(Verify, RenderNamesEveryCheck) {
  const auto report = verify_document(designed({CodeParams{7, 3, 1, 1}}));
  std::istringstream lines(report.render());
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(line.rfind("PASS ", 0), 0U) << line;
    ++count;
  }
  EXPECT_EQ(count, report.checks.size());
}

}  // namespace
}  // namespace ooc
