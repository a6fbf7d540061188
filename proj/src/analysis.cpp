#include "hatecode/analysis.hpp"

#include <algorithm>
#include <map>

#include "hatecode/errors.hpp"

namespace hatecode {

std::vector<DailyBin> timeline(const std::vector<Tweet>& flagged) {
  if (flagged.empty()) return {};

  std::map<UtcDay, std::int64_t> counts;
  for (const Tweet& t : flagged) {
    ++counts[std::chrono::floor<std::chrono::days>(t.timestamp)];
  }

  std::vector<DailyBin> bins;
  const UtcDay first = counts.begin()->first;
  const UtcDay last = counts.rbegin()->first;
  for (UtcDay day = first; day <= last; day += std::chrono::days{1}) {
    auto it = counts.find(day);
    bins.push_back({day, it == counts.end() ? 0 : it->second});
  }
  return bins;
}

DailyBin peak(const std::vector<DailyBin>& bins) {
  if (bins.empty()) throw EmptyTimeline();
  const DailyBin* best = &bins.front();
  for (const DailyBin& bin : bins) {
    if (bin.count > best->count) best = &bin;  // strict: ties keep the earliest
  }
  return *best;
}

std::vector<AggressorRecord> extract_aggressors(
    const std::vector<std::pair<std::string, std::string>>& flagged,
    std::int64_t threshold) {
  if (threshold < 1) throw InvalidArgument("threshold must be >= 1");

  std::map<std::string, std::vector<std::string>> by_handle;
  for (const auto& [handle, id] : flagged) by_handle[handle].push_back(id);

  std::vector<AggressorRecord> records;
  for (auto& [handle, ids] : by_handle) {
    if (static_cast<std::int64_t>(ids.size()) < threshold) continue;
    records.push_back({handle, static_cast<std::int64_t>(ids.size()),
                       std::move(ids)});
  }
  std::sort(records.begin(), records.end(),
            [](const AggressorRecord& a, const AggressorRecord& b) {
              if (a.hateful_count != b.hateful_count) {
                return a.hateful_count > b.hateful_count;
              }
              return a.handle < b.handle;
            });
  return records;
}

}  // namespace hatecode
