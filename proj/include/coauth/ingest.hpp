#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coauth {

/// One publication row from a bibliographic export.
struct BiblioRecord {
  std::string record_id;
  std::vector<std::string> authors;
  int year = 0;
  std::string doc_type;
  std::uint64_t times_cited = 0;
  std::string source;

  friend bool operator==(const BiblioRecord&, const BiblioRecord&) = default;
};

/// Canonical author identity, "SURNAME, INITIALS". Construct through
/// normalize_author() unless the string is known to be canonical already.
class AuthorKey {
 public:
  AuthorKey() = default;
  explicit AuthorKey(std::string canonical) : canonical_(std::move(canonical)) {}

  const std::string& str() const noexcept { return canonical_; }

  friend auto operator<=>(const AuthorKey&, const AuthorKey&) = default;
  friend bool operator==(const AuthorKey&, const AuthorKey&) = default;

 private:
  std::string canonical_;
};

/// Variant -> canonical author mapping with chains already resolved, so a
/// single lookup always lands on a terminal key.
class AuthorMergeMap {
 public:
  AuthorMergeMap() = default;

  /// Builds the closure of `pairs`. Keys and values are normalized first;
  /// entries that normalize to themselves are dropped. Throws ConfigError on
  /// a cycle or on one variant mapped to two different targets.
  static AuthorMergeMap from_pairs(std::span<const std::pair<std::string, std::string>> pairs);

  AuthorKey resolve(const AuthorKey& key) const;
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<AuthorKey, AuthorKey>& entries() const noexcept { return entries_; }

 private:
  std::map<AuthorKey, AuthorKey> entries_;
};

struct ParseDiagnostics {
  std::size_t anonymous_rejected = 0;  // rows with an empty author field
};

// Tab-delimited export with mandatory columns UT, AU, PY, DT, TC, SO in any
// order; extra columns are ignored. Rows with no authors are skipped and
// counted in `diag`.
std::vector<BiblioRecord> parse_records(std::istream& in, ParseDiagnostics* diag = nullptr);

// Writes the six mandatory columns in canonical order. parse_records() reads
// the result back unchanged.
void serialize_records(std::ostream& out, std::span<const BiblioRecord> records);

std::vector<BiblioRecord> filter_documents(std::span<const BiblioRecord> records,
                                           const std::set<std::string>& allowed);

AuthorKey normalize_author(std::string_view raw);

// Normalizes every author name and drops repeated authors within a paper
// (first occurrence kept).
std::vector<BiblioRecord> normalize_records(std::span<const BiblioRecord> records);

// Reads `variant,canonical` lines; '#' comment lines and blank lines are
// skipped. Names containing commas must be quoted, except that an unquoted
// line of four comma-separated parts is read as two "SURNAME, INITIALS" names.
AuthorMergeMap load_merge_map(std::istream& in);

std::vector<BiblioRecord> apply_merge_map(std::span<const BiblioRecord> records,
                                          const AuthorMergeMap& map);

// Full (non-fractional) sum of times_cited over each author's papers.
std::map<AuthorKey, std::uint64_t> author_citations(std::span<const BiblioRecord> records);

}  // namespace coauth
