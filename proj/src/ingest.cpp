#include "coauth/ingest.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "coauth/csv.hpp"
#include "coauth/error.hpp"

namespace coauth {

namespace {

constexpr std::array<std::string_view, 6> kColumns = {"UT", "AU", "PY", "DT", "TC", "SO"};
enum Column { kUT, kAU, kPY, kDT, kTC, kSO };

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find('\t', start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

template <typename T>
T parse_integer(std::string_view field, std::size_t line, std::string_view column) {
  field = trim(field);
  T value{};
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc() || ptr != last) {
    throw RowError(line, "column " + std::string(column) + ": expected integer, got '" +
                             std::string(field) + "'");
  }
  return value;
}

// Uppercases, drops periods and collapses whitespace runs to one space.
std::string clean_name_part(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (char c : s) {
    if (c == '.') continue;
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return out;
}

}  // namespace

AuthorMergeMap AuthorMergeMap::from_pairs(
    std::span<const std::pair<std::string, std::string>> pairs) {
  std::map<AuthorKey, AuthorKey> direct;
  for (const auto& [variant, canonical] : pairs) {
    auto from = normalize_author(variant);
    auto to = normalize_author(canonical);
    if (from == to) continue;
    auto [it, inserted] = direct.emplace(from, to);
    if (!inserted && it->second != to) {
      throw ConfigError("merge map sends '" + from.str() + "' to both '" + it->second.str() +
                        "' and '" + to.str() + "'");
    }
  }

  AuthorMergeMap out;
  for (const auto& [from, first_hop] : direct) {
    const AuthorKey* target = &first_hop;
    std::set<AuthorKey> seen{from};
    while (true) {
      if (seen.count(*target)) {
        throw ConfigError("merge map contains a cycle through '" + from.str() + "'");
      }
      seen.insert(*target);
      auto next = direct.find(*target);
      if (next == direct.end()) break;
      target = &next->second;
    }
    out.entries_.emplace(from, *target);
  }
  return out;
}

AuthorKey AuthorMergeMap::resolve(const AuthorKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? key : it->second;
}

std::vector<BiblioRecord> parse_records(std::istream& in, ParseDiagnostics* diag) {
  std::string line;
  std::size_t line_no = 0;

  std::array<std::size_t, kColumns.size()> index{};
  std::size_t header_width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    csv::chomp(line);
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (trim(line).empty()) continue;
    const auto header = split_tabs(line);
    header_width = header.size();
    for (std::size_t c = 0; c < kColumns.size(); ++c) {
      auto it = std::find_if(header.begin(), header.end(),
                             [&](std::string_view h) { return trim(h) == kColumns[c]; });
      if (it == header.end()) {
        throw FormatError("header is missing mandatory column " + std::string(kColumns[c]));
      }
      index[c] = static_cast<std::size_t>(it - header.begin());
    }
    break;
  }
  if (header_width == 0) throw FormatError("input has no header row");

  std::vector<BiblioRecord> records;
  std::unordered_set<std::string> ids;
  while (std::getline(in, line)) {
    ++line_no;
    csv::chomp(line);
    if (trim(line).empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() < header_width) {
      throw RowError(line_no, "expected " + std::to_string(header_width) + " fields, got " +
                                  std::to_string(fields.size()));
    }

    BiblioRecord rec;
    rec.record_id = std::string(trim(fields[index[kUT]]));
    if (rec.record_id.empty()) throw RowError(line_no, "empty record id");

    std::string_view au = fields[index[kAU]];
    while (!au.empty()) {
      const auto pos = au.find(';');
      const auto name = trim(au.substr(0, pos));
      if (!name.empty()) rec.authors.emplace_back(name);
      if (pos == std::string_view::npos) break;
      au.remove_prefix(pos + 1);
    }

    rec.year = parse_integer<int>(fields[index[kPY]], line_no, "PY");
    if (rec.year < 1900 || rec.year > 2100) {
      throw RowError(line_no, "year " + std::to_string(rec.year) + " outside [1900, 2100]");
    }
    const auto tc_field = trim(fields[index[kTC]]);
    if (!tc_field.empty() && tc_field.front() == '-') {
      throw RowError(line_no, "negative citation count");
    }
    rec.times_cited = parse_integer<std::uint64_t>(tc_field, line_no, "TC");
    rec.doc_type = std::string(trim(fields[index[kDT]]));
    rec.source = std::string(trim(fields[index[kSO]]));

    if (rec.authors.empty()) {
      if (diag) ++diag->anonymous_rejected;
      continue;
    }
    if (!ids.insert(rec.record_id).second) {
      throw CorpusError("duplicate record id '" + rec.record_id + "' at line " +
                        std::to_string(line_no));
    }
    records.push_back(std::move(rec));
  }
  return records;
}

void serialize_records(std::ostream& out, std::span<const BiblioRecord> records) {
  out << "UT\tAU\tPY\tDT\tTC\tSO\n";
  for (const auto& r : records) {
    out << r.record_id << '\t';
    for (std::size_t i = 0; i < r.authors.size(); ++i) {
      if (i) out << "; ";
      out << r.authors[i];
    }
    out << '\t' << r.year << '\t' << r.doc_type << '\t' << r.times_cited << '\t' << r.source
        << '\n';
  }
}

std::vector<BiblioRecord> filter_documents(std::span<const BiblioRecord> records,
                                           const std::set<std::string>& allowed) {
  if (allowed.empty()) throw DomainError("allowed document type set is empty");
  std::set<std::string> folded;
  for (const auto& t : allowed) folded.insert(lower(t));

  std::vector<BiblioRecord> out;
  for (const auto& r : records) {
    if (folded.count(lower(r.doc_type))) out.push_back(r);
  }
  return out;
}

AuthorKey normalize_author(std::string_view raw) {
  raw = trim(raw);
  if (raw.empty()) throw NameError("author name is empty");

  std::string surname;
  std::string initials;
  const auto comma = raw.find(',');
  if (comma != std::string_view::npos) {
    surname = clean_name_part(raw.substr(0, comma));
    // Any further commas are treated as whitespace.
    std::string rest(raw.substr(comma + 1));
    std::replace(rest.begin(), rest.end(), ',', ' ');
    initials = clean_name_part(rest);
  } else {
    const auto cleaned = clean_name_part(raw);
    const auto space = cleaned.rfind(' ');
    if (space == std::string::npos) {
      surname = cleaned;
    } else {
      surname = cleaned.substr(0, space);
      initials = cleaned.substr(space + 1);
    }
  }
  if (surname.empty()) {
    throw NameError("author name '" + std::string(raw) + "' has no surname");
  }
  return AuthorKey(initials.empty() ? surname + "," : surname + ", " + initials);
}

std::vector<BiblioRecord> normalize_records(std::span<const BiblioRecord> records) {
  std::vector<BiblioRecord> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    BiblioRecord n = r;
    n.authors.clear();
    for (const auto& a : r.authors) {
      auto key = normalize_author(a).str();
      if (std::find(n.authors.begin(), n.authors.end(), key) == n.authors.end()) {
        n.authors.push_back(std::move(key));
      }
    }
    out.push_back(std::move(n));
  }
  return out;
}

AuthorMergeMap load_merge_map(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    csv::chomp(line);
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto fields = csv::split_line(body);
    if (fields.size() == 4 && body.find('"') == std::string_view::npos) {
      fields = {fields[0] + "," + fields[1], fields[2] + "," + fields[3]};
    }
    if (fields.size() != 2) {
      throw ConfigError("merge map line " + std::to_string(line_no) +
                        ": expected 2 fields `variant,canonical`");
    }
    try {
      pairs.emplace_back(fields[0], fields[1]);
      normalize_author(fields[0]);
      normalize_author(fields[1]);
    } catch (const NameError& e) {
      throw ConfigError("merge map line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return AuthorMergeMap::from_pairs(pairs);
}

std::vector<BiblioRecord> apply_merge_map(std::span<const BiblioRecord> records,
                                          const AuthorMergeMap& map) {
  std::vector<BiblioRecord> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    BiblioRecord m = r;
    m.authors.clear();
    for (const auto& a : r.authors) {
      const auto target = map.resolve(AuthorKey(a)).str();
      if (std::find(m.authors.begin(), m.authors.end(), target) == m.authors.end()) {
        m.authors.push_back(target);
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::map<AuthorKey, std::uint64_t> author_citations(std::span<const BiblioRecord> records) {
  std::map<AuthorKey, std::uint64_t> out;
  for (const auto& r : records) {
    for (const auto& a : r.authors) out[AuthorKey(a)] += r.times_cited;
  }
  return out;
}

}  // namespace coauth
