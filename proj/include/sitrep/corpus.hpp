#pragma once
// Core data model: harvested social entries, the merged corpus and its
// summary statistics. Everything is immutable after construction and all
// operations are pure.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sitrep/errors.hpp"
#include "sitrep/geo.hpp"
#include "sitrep/text.hpp"
#include "sitrep/time.hpp"

namespace sitrep {

enum class EntryKind { post, reply };

enum class QueryKind { keyword, location };

inline std::string_view to_string(EntryKind k) {
  return k == EntryKind::post ? "post" : "reply";
}

inline std::string_view to_string(QueryKind k) {
  return k == QueryKind::keyword ? "keyword" : "location";
}

// Provenance of an entry: which harvest query produced it.
struct QueryTag {
  QueryKind kind = QueryKind::keyword;
  std::string descriptor;  // the query text or "epicenter+radius" spec

  auto operator<=>(const QueryTag&) const = default;
};

struct EngagementMetrics {
  std::uint64_t reposts = 0;
  std::uint64_t likes = 0;
  std::uint64_t views = 0;

  bool operator==(const EngagementMetrics&) const = default;
};

struct SocialEntry {
  std::string id;
  EntryKind kind = EntryKind::post;
  std::optional<std::string> parent_id;  // present iff kind == reply
  std::string author;                    // pseudonymous, opaque
  Timestamp created_at = 0;
  std::string text;
  std::optional<std::string> lang;
  std::optional<GeoPoint> geo;  // usually absent; platforms strip metadata
  EngagementMetrics metrics;
  std::vector<QueryTag> sources;  // kept sorted and unique
};

inline bool text_is_blank(std::string_view s) {
  for (char c : s)
    if (c != ' ' && c != '\t' && c != '\r' && c != '\n' && c != '\f' &&
        c != '\v')
      return false;
  return true;
}

inline void sort_unique_sources(std::vector<QueryTag>& sources) {
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
}

// Throws on any violated field invariant. `where` goes into the message.
inline void validate_entry(const SocialEntry& e, const std::string& where = {}) {
  auto bad = [&](const std::string& reason) {
    return error(errc::malformed_record,
                 where.empty() ? reason + " (id '" + e.id + "')"
                               : reason + " " + where);
  };
  if (e.id.empty()) throw bad("missing id");
  if ((e.kind == EntryKind::reply) != e.parent_id.has_value())
    throw bad("kind/parent_id mismatch");
  if (text_is_blank(e.text)) throw bad("empty text");
  if (e.geo && !is_valid(*e.geo)) throw bad("invalid geo");
  if (e.sources.empty()) throw bad("empty sources");
  for (const auto& tag : e.sources)
    if (tag.descriptor.empty()) throw bad("empty source descriptor");
}

// Entries keyed by unique id, all created_at within the harvest window.
class Corpus {
 public:
  Corpus() = default;

  Corpus(std::vector<SocialEntry> entries, TimeWindow window)
      : entries_(std::move(entries)), window_(window) {
    index_.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const auto& e = entries_[i];
      if (!index_.emplace(e.id, i).second)
        throw error(errc::duplicate_id, e.id);
      if (!window_.contains(e.created_at))
        throw error(errc::malformed_record,
                    "entry '" + e.id + "' outside harvest window");
    }
  }

  // Derives the tight window from the entries themselves.
  static Corpus from_entries(std::vector<SocialEntry> entries) {
    TimeWindow w;
    if (!entries.empty()) {
      auto [lo, hi] = std::minmax_element(
          entries.begin(), entries.end(),
          [](const auto& a, const auto& b) { return a.created_at < b.created_at; });
      w = {lo->created_at, hi->created_at};
    }
    return Corpus(std::move(entries), w);
  }

  std::span<const SocialEntry> entries() const { return entries_; }
  const TimeWindow& window() const { return window_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const SocialEntry* find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    return it == index_.end() ? nullptr : &entries_[it->second];
  }

  // Order-independent content hash over (id, created_at, text); two corpora
  // holding the same entries digest identically regardless of entry order.
  std::uint64_t digest() const {
    std::uint64_t acc = 0;
    for (const auto& e : entries_) {
      std::uint64_t h = fnv1a(e.id);
      h = fnv1a(format_iso8601(e.created_at), h);
      h = fnv1a(e.text, h);
      acc += h;
    }
    return acc ^ static_cast<std::uint64_t>(entries_.size());
  }

 private:
  std::vector<SocialEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  TimeWindow window_;
};

struct CorpusStats {
  std::uint64_t total = 0;
  std::uint64_t posts = 0;
  std::uint64_t replies = 0;
  EngagementMetrics engagement;
  // hours since event -> fraction of entries created before that horizon
  std::map<int, double> window_shares;
};

// Fraction of entries with t0 <= created_at < t0 + hours.
inline double window_share(const Corpus& c, Timestamp t0, double hours) {
  if (c.empty()) throw error(errc::empty_corpus, "window_share");
  if (hours < 0.0) throw error(errc::bad_config, "negative window length");
  std::size_t n = 0;
  for (const auto& e : c.entries()) {
    const double offset = static_cast<double>(e.created_at - t0);
    if (offset >= 0.0 && offset < hours * kSecondsPerHour) ++n;
  }
  return static_cast<double>(n) / static_cast<double>(c.size());
}

inline const int kShareHorizonsHours[] = {1, 6, 12, 24, 48, 72, 168};

// Counts and engagement sums; window shares are taken from `t0` when given,
// otherwise from the corpus window start.
inline CorpusStats corpus_stats(const Corpus& c,
                                std::optional<Timestamp> t0 = std::nullopt) {
  CorpusStats s;
  s.total = c.size();
  for (const auto& e : c.entries()) {
    if (e.kind == EntryKind::post)
      ++s.posts;
    else
      ++s.replies;
    s.engagement.reposts += e.metrics.reposts;
    s.engagement.likes += e.metrics.likes;
    s.engagement.views += e.metrics.views;
  }
  if (!c.empty()) {
    const Timestamp origin = t0.value_or(c.window().start);
    for (int h : kShareHorizonsHours)
      s.window_shares[h] = window_share(c, origin, h);
  }
  return s;
}

// Merges two harvest streams into one corpus. Ids present in both keep the
// first stream's fields and the union of both source tag sets. Entries that
// share an id but disagree on text or created_at signal a corrupt archive.
inline Corpus merge_dedup(std::span<const SocialEntry> a,
                          std::span<const SocialEntry> b) {
  std::vector<SocialEntry> merged;
  merged.reserve(a.size() + b.size());
  std::unordered_map<std::string, std::size_t> seen;
  seen.reserve(a.size() + b.size());
  for (const auto& e : a) {
    if (!seen.emplace(e.id, merged.size()).second)
      throw error(errc::duplicate_id, "first stream repeats id '" + e.id + "'");
    merged.push_back(e);
  }
  for (const auto& e : b) {
    auto [it, inserted] = seen.emplace(e.id, merged.size());
    if (inserted) {
      merged.push_back(e);
      continue;
    }
    SocialEntry& kept = merged[it->second];
    if (&kept == &merged[it->second] && it->second >= a.size())
      throw error(errc::duplicate_id, "second stream repeats id '" + e.id + "'");
    if (kept.text != e.text || kept.created_at != e.created_at)
      throw error(errc::conflicting_duplicate, e.id);
    kept.sources.insert(kept.sources.end(), e.sources.begin(), e.sources.end());
    sort_unique_sources(kept.sources);
  }
  return Corpus::from_entries(std::move(merged));
}

}  // namespace sitrep
