#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hatecode/corpus.hpp"
#include "hatecode/timeutil.hpp"

namespace hatecode {

struct DailyBin {
  UtcDay date{};
  std::int64_t count = 0;

  bool operator==(const DailyBin&) const = default;
};

struct AggressorRecord {
  std::string handle;
  std::int64_t hateful_count = 0;       // == tweet_ids.size()
  std::vector<std::string> tweet_ids;   // input order
};

// One bin per UTC calendar day from the earliest to the latest timestamp,
// inclusive, with zero-filled gaps. Counts sum to the input size.
std::vector<DailyBin> timeline(const std::vector<Tweet>& flagged);

// Maximum-count bin; ties resolve to the earliest date. Throws
// EmptyTimeline on an empty input.
DailyBin peak(const std::vector<DailyBin>& bins);

// Groups flagged (handle, tweet id) pairs by handle and keeps handles with
// at least `threshold` hits, ordered by count descending then handle.
std::vector<AggressorRecord> extract_aggressors(
    const std::vector<std::pair<std::string, std::string>>& flagged,
    std::int64_t threshold);

}  // namespace hatecode
