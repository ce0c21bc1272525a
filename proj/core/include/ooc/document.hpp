#pragma once

// On-disk form of a designed family and its independent re-verification.
//
// JSON is canonical: keys sorted, two-space indent, trailing newline, and
// strict on read (every field required, unknown fields rejected). CSV is a
// flat export of the codes only.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ooc/clique.hpp"
#include "ooc/code_model.hpp"
#include "ooc/designer.hpp"

namespace ooc {

inline constexpr std::string_view kFormatVersion = "1.0";
inline constexpr std::string_view kToolName = "ooc";
inline constexpr std::string_view kToolVersion = "1.0.0";

/// Thrown when a document does not match the schema.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DocumentCode {
  std::vector<int> dopr;
  std::vector<int> wpr;
  friend bool operator==(const DocumentCode&, const DocumentCode&) = default;
};

struct DocumentSet {
  CodeParams params;
  std::vector<DocumentCode> codes;
  friend bool operator==(const DocumentSet&, const DocumentSet&) = default;
};

/// Echo of the design request. max_sets = 0 means no cap.
struct ConfigEcho {
  std::vector<int> n;
  std::vector<int> w;
  int lambda_a = 1;
  int lambda_c = 1;
  std::size_t max_sets = 0;
  friend bool operator==(const ConfigEcho&, const ConfigEcho&) = default;
};

struct Provenance {
  std::string tool{kToolName};
  std::string version{kToolVersion};
  ConfigEcho config;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct CodeSetDocument {
  std::string format_version{kFormatVersion};
  std::vector<DocumentSet> sets;
  int family_interset_lambda = 0;
  Provenance provenance;
  friend bool operator==(const CodeSetDocument&, const CodeSetDocument&) = default;
};

CodeSetDocument make_document(const Family& family, const DesignConfig& config);

std::string to_json(const CodeSetDocument& doc);
/// Throws DocumentError on malformed input.
CodeSetDocument from_json(std::string_view text);

/// Header "set_id,n,w,dopr,wpr"; sequences dash-joined.
std::string to_csv(const CodeSetDocument& doc);

enum class CheckStatus { kPass, kFail, kMethodDisagreement };

struct VerificationCheck {
  /// Short invariant name, e.g. "dopr-sum".
  std::string invariant;
  /// Where it was checked, e.g. "set 0 code 2".
  std::string subject;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool passed() const;
  bool has_method_disagreement() const;
  std::vector<const VerificationCheck*> failures() const;
  /// One "PASS|FAIL|DISAGREE <invariant> <subject>: <detail>" line per check.
  std::string render() const;
};

/// Recomputes every stored and implied value from the raw code lists:
/// DoPR sums, WPR consistency, standard form, per-code auto-correlation (by
/// EDoP rows and by shifting), intra-set cross-correlation, set size against
/// the Johnson bound, inter-set values and the stored family value.
VerificationReport verify_document(const CodeSetDocument& doc);

}  // namespace ooc
