#include "ooc/document.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "ooc/correlation.hpp"
#include "ooc/edop.hpp"

namespace ooc {

using nlohmann::json;

namespace {

// --- writing ----------------------------------------------------------------

json to_json_value(const CodeSetDocument& doc) {
  json sets = json::array();
  for (const auto& s : doc.sets) {
    json codes = json::array();
    for (const auto& c : s.codes) codes.push_back({{"dopr", c.dopr}, {"wpr", c.wpr}});
    sets.push_back({{"n", s.params.n},
                    {"w", s.params.w},
                    {"lambda_a", s.params.lambda_a},
                    {"lambda_c", s.params.lambda_c},
                    {"codes", std::move(codes)}});
  }
  const auto& cfg = doc.provenance.config;
  return {{"format_version", doc.format_version},
          {"family_interset_lambda", doc.family_interset_lambda},
          {"sets", std::move(sets)},
          {"provenance",
           {{"tool", doc.provenance.tool},
            {"version", doc.provenance.version},
            {"config",
             {{"n", cfg.n},
              {"w", cfg.w},
              {"lambda_a", cfg.lambda_a},
              {"lambda_c", cfg.lambda_c},
              {"max_sets", cfg.max_sets}}}}}};
}

// --- strict reading ---------------------------------------------------------

const json& field(const json& obj, const char* key, std::string_view where) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw DocumentError(std::string(where) + ": missing field \"" + key + "\"");
  }
  return *it;
}

void expect_object(const json& obj, std::initializer_list<const char*> keys, std::string_view where) {
  if (!obj.is_object()) throw DocumentError(std::string(where) + ": expected an object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      throw DocumentError(std::string(where) + ": unknown field \"" + key + "\"");
    }
  }
  for (const char* key : keys) field(obj, key, where);
}

int as_int(const json& v, std::string_view where) {
  if (!v.is_number_integer()) throw DocumentError(std::string(where) + ": expected an integer");
  const auto x = v.get<long long>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
    throw DocumentError(std::string(where) + ": integer out of range");
  }
  return static_cast<int>(x);
}

std::vector<int> as_int_list(const json& v, std::string_view where) {
  if (!v.is_array()) throw DocumentError(std::string(where) + ": expected an integer list");
  std::vector<int> out;
  for (const auto& x : v) out.push_back(as_int(x, where));
  return out;
}

std::string as_string(const json& v, std::string_view where) {
  if (!v.is_string()) throw DocumentError(std::string(where) + ": expected a string");
  return v.get<std::string>();
}

// --- verification helpers ---------------------------------------------------

std::string subject_of(std::size_t set, std::size_t code) {
  return "set " + std::to_string(set) + " code " + std::to_string(code);
}

std::vector<int> shared_entries(const EdopMatrix& a, const EdopMatrix& b) {
  std::set<int> ea(a.entries().begin(), a.entries().end());
  std::set<int> out;
  for (int e : b.entries()) {
    if (ea.count(e)) out.insert(e);
  }
  return {out.begin(), out.end()};
}

}  // namespace

CodeSetDocument make_document(const Family& family, const DesignConfig& config) {
  CodeSetDocument doc;
  for (const auto& s : family.sets) {
    DocumentSet ds;
    ds.params = s.params;
    for (const auto& c : s.codes) {
      const auto wpr = wpr_from_dopr(c);
      ds.codes.push_back({{c.dops().begin(), c.dops().end()},
                          {wpr.positions().begin(), wpr.positions().end()}});
    }
    doc.sets.push_back(std::move(ds));
  }
  doc.family_interset_lambda = family.interset_lambda;

  auto& echo = doc.provenance.config;
  for (const auto& p : config.parameter_list) {
    echo.n.push_back(p.n);
    echo.w.push_back(p.w);
  }
  if (!config.parameter_list.empty()) {
    echo.lambda_a = config.parameter_list.front().lambda_a;
    echo.lambda_c = config.parameter_list.front().lambda_c;
  }
  echo.max_sets = config.max_sets.value_or(0);
  return doc;
}

std::string to_json(const CodeSetDocument& doc) { return to_json_value(doc).dump(2) + "\n"; }

CodeSetDocument from_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  expect_object(root, {"format_version", "family_interset_lambda", "sets", "provenance"}, "document");

  CodeSetDocument doc;
  doc.format_version = as_string(root["format_version"], "format_version");
  if (doc.format_version != kFormatVersion) {
    throw DocumentError("unsupported format_version \"" + doc.format_version + "\"");
  }
  doc.family_interset_lambda = as_int(root["family_interset_lambda"], "family_interset_lambda");

  const auto& sets = root["sets"];
  if (!sets.is_array()) throw DocumentError("sets: expected a list");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string where = "sets[" + std::to_string(i) + "]";
    const auto& s = sets[i];
    expect_object(s, {"n", "w", "lambda_a", "lambda_c", "codes"}, where);
    DocumentSet ds;
    ds.params = {as_int(s["n"], where + ".n"), as_int(s["w"], where + ".w"),
                 as_int(s["lambda_a"], where + ".lambda_a"),
                 as_int(s["lambda_c"], where + ".lambda_c")};
    const auto& codes = s["codes"];
    if (!codes.is_array()) throw DocumentError(where + ".codes: expected a list");
    for (std::size_t j = 0; j < codes.size(); ++j) {
      const std::string cw = where + ".codes[" + std::to_string(j) + "]";
      expect_object(codes[j], {"dopr", "wpr"}, cw);
      ds.codes.push_back({as_int_list(codes[j]["dopr"], cw + ".dopr"),
                          as_int_list(codes[j]["wpr"], cw + ".wpr")});
    }
    doc.sets.push_back(std::move(ds));
  }

  const auto& prov = root["provenance"];
  expect_object(prov, {"tool", "version", "config"}, "provenance");
  doc.provenance.tool = as_string(prov["tool"], "provenance.tool");
  doc.provenance.version = as_string(prov["version"], "provenance.version");
  const auto& cfg = prov["config"];
  expect_object(cfg, {"n", "w", "lambda_a", "lambda_c", "max_sets"}, "provenance.config");
  auto& echo = doc.provenance.config;
  echo.n = as_int_list(cfg["n"], "provenance.config.n");
  echo.w = as_int_list(cfg["w"], "provenance.config.w");
  echo.lambda_a = as_int(cfg["lambda_a"], "provenance.config.lambda_a");
  echo.lambda_c = as_int(cfg["lambda_c"], "provenance.config.lambda_c");
  const int max_sets = as_int(cfg["max_sets"], "provenance.config.max_sets");
  if (max_sets < 0) throw DocumentError("provenance.config.max_sets: must be >= 0");
  echo.max_sets = static_cast<std::size_t>(max_sets);
  return doc;
}

std::string to_csv(const CodeSetDocument& doc) {
  std::ostringstream out;
  out << "set_id,n,w,dopr,wpr\n";
  for (std::size_t i = 0; i < doc.sets.size(); ++i) {
    const auto& s = doc.sets[i];
    for (const auto& c : s.codes) {
      out << i << ',' << s.params.n << ',' << s.params.w << ',' << join(c.dopr, '-') << ','
          << join(c.wpr, '-') << '\n';
    }
  }
  return out.str();
}

// --- verification -----------------------------------------------------------

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const auto& c) { return c.status == CheckStatus::kPass; });
}

bool VerificationReport::has_method_disagreement() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const auto& c) { return c.status == CheckStatus::kMethodDisagreement; });
}

std::vector<const VerificationCheck*> VerificationReport::failures() const {
  std::vector<const VerificationCheck*> out;
  for (const auto& c : checks) {
    if (c.status != CheckStatus::kPass) out.push_back(&c);
  }
  return out;
}

std::string VerificationReport::render() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    switch (c.status) {
      case CheckStatus::kPass: out << "PASS "; break;
      case CheckStatus::kFail: out << "FAIL "; break;
      case CheckStatus::kMethodDisagreement: out << "DISAGREE "; break;
    }
    out << c.invariant << ' ' << c.subject;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  return out.str();
}

VerificationReport verify_document(const CodeSetDocument& doc) {
  VerificationReport report;
  auto add = [&](std::string invariant, std::string subject, bool ok, std::string detail,
                 CheckStatus failure = CheckStatus::kFail) {
    report.checks.push_back(
        {std::move(invariant), std::move(subject), ok ? CheckStatus::kPass : failure, std::move(detail)});
  };

  // Codes that survived the structural checks, per set.
  std::vector<std::vector<Dopr>> valid(doc.sets.size());
  std::vector<bool> params_ok(doc.sets.size(), false);

  for (std::size_t si = 0; si < doc.sets.size(); ++si) {
    const auto& set = doc.sets[si];
    const auto& p = set.params;
    const std::string set_subject = "set " + std::to_string(si);
    try {
      p.validate();
      params_ok[si] = true;
      add("code-parameters", set_subject, true, to_string(p));
    } catch (const std::invalid_argument& e) {
      add("code-parameters", set_subject, false, e.what());
      continue;
    }
    add("set-nonempty", set_subject, !set.codes.empty(), std::to_string(set.codes.size()) + " code(s)");

    for (std::size_t ci = 0; ci < set.codes.size(); ++ci) {
      const auto& c = set.codes[ci];
      const std::string subject = subject_of(si, ci);
      long long sum = 0;
      bool positive = true;
      for (int d : c.dopr) {
        sum += d;
        positive = positive && d >= 1;
      }
      const bool sum_ok = positive && sum == p.n && static_cast<int>(c.dopr.size()) == p.w;
      add("dopr-sum", subject, sum_ok,
          "DoPR " + join(c.dopr) + " has " + std::to_string(c.dopr.size()) +
              " positive element(s) summing to " + std::to_string(sum) + "; expected w = " +
              std::to_string(p.w) + " summing to n = " + std::to_string(p.n));
      if (!sum_ok) continue;
      const Dopr code(c.dopr, p.n);

      bool wpr_ok = false;
      try {
        wpr_ok = dopr_from_wpr(Wpr(c.wpr, p.n)) == code &&
                 !c.wpr.empty() && c.wpr.front() == 0;
      } catch (const std::invalid_argument&) {
        wpr_ok = false;
      }
      add("wpr-matches-dopr", subject, wpr_ok, "WPR " + join(c.wpr));

      const auto standard = standardize(code);
      add("standard-form", subject, standard.dopr() == code,
          "standard rotation is " + to_string(standard.dopr()));

      const auto edop = edop_full(code);
      const int by_rows = autocorr_edop(edop).lambda_ax;
      const int by_shift = autocorr_bruteforce(binary_from_wpr(wpr_from_dopr(code))).lambda_ax;
      add("auto-correlation-methods", subject, by_rows == by_shift,
          "EDoP rows give " + std::to_string(by_rows) + ", shifting gives " + std::to_string(by_shift),
          CheckStatus::kMethodDisagreement);
      add("auto-correlation", subject, std::max(by_rows, by_shift) <= p.lambda_a,
          "lambda_ax = " + std::to_string(std::max(by_rows, by_shift)) + ", limit " +
              std::to_string(p.lambda_a));
      valid[si].push_back(code);
    }

    // Pairwise within the set.
    const auto& codes = valid[si];
    std::vector<EdopMatrix> m;
    for (const auto& c : codes) m.push_back(edop_full(c));
    int intra = 0;
    bool intra_ok = true;
    for (std::size_t i = 0; i < codes.size(); ++i) {
      for (std::size_t j = i + 1; j < codes.size(); ++j) {
        const std::string subject =
            set_subject + " codes " + to_string(codes[i]) + " " + to_string(codes[j]);
        const int by_rows = crosscorr_edop(m[i], m[j]).lambda_cxy;
        const int by_shift = crosscorr_bruteforce(binary_from_wpr(wpr_from_dopr(codes[i])),
                                                  binary_from_wpr(wpr_from_dopr(codes[j])))
                                 .lambda_cxy;
        if (by_rows != by_shift) {
          add("cross-correlation-methods", subject, false,
              "EDoP rows give " + std::to_string(by_rows) + ", shifting gives " +
                  std::to_string(by_shift),
              CheckStatus::kMethodDisagreement);
        }
        const int value = std::max(by_rows, by_shift);
        intra = std::max(intra, value);
        if (value > p.lambda_c) {
          intra_ok = false;
          std::string detail =
              "lambda_cxy = " + std::to_string(value) + ", limit " + std::to_string(p.lambda_c);
          if (p.lambda_c == 1) {
            detail += "; codes share difference value(s) " + join(shared_entries(m[i], m[j]));
          }
          add("intra-set-cross-correlation", subject, false, detail);
        }
      }
    }
    if (intra_ok) {
      add("intra-set-cross-correlation", set_subject, true,
          codes.size() >= 2 ? "lambda_c = " + std::to_string(intra) : "single code");
    }
    const auto distinct = std::set<Dopr>(codes.begin(), codes.end()).size();
    add("distinct-codes", set_subject, distinct == codes.size(),
        std::to_string(distinct) + " distinct of " + std::to_string(codes.size()));
    const auto bound = johnson_bound(p.n, p.w, std::max(p.lambda_a, p.lambda_c));
    add("set-size-bound", set_subject, set.codes.size() <= bound,
        std::to_string(set.codes.size()) + " code(s), Johnson bound " + std::to_string(bound));
  }

  // Between sets.
  int interset = 0;
  int pairs = 0;
  int family_limit = 2;
  for (const auto& s : doc.sets) family_limit = std::max(family_limit, s.params.lambda_c + 1);
  for (std::size_t a = 0; a < doc.sets.size(); ++a) {
    for (std::size_t b = a + 1; b < doc.sets.size(); ++b) {
      if (valid[a].empty() || valid[b].empty()) continue;
      const int v = interset_crosscorr(std::span<const Dopr>(valid[a]), std::span<const Dopr>(valid[b]));
      interset = std::max(interset, v);
      ++pairs;
      const std::string subject = "sets " + std::to_string(a) + " " + std::to_string(b);
      const bool same_class = doc.sets[a].params == doc.sets[b].params;
      const int floor = same_class ? doc.sets[a].params.lambda_c + 1 : 1;
      add("inter-set-cross-correlation", subject, v >= floor && v <= family_limit,
          "value " + std::to_string(v) + ", expected " + std::to_string(floor) + ".." +
              std::to_string(family_limit));
    }
  }
  add("family-interset-lambda", "document", interset == doc.family_interset_lambda,
      "recomputed " + std::to_string(interset) + " over " + std::to_string(pairs) +
          " set pair(s), stored " + std::to_string(doc.family_interset_lambda));
  return report;
}

}  // namespace ooc
