#include "hatecode/synth.hpp"

#include <algorithm>
#include <cstdio>

#include "hatecode/rng.hpp"

namespace hatecode {

namespace {

const char* const kCodewords[] = {"google", "yahoo",   "skype",
                                  "bing",   "skittle", "butterfly"};

// {0} and {1} are codeword slots; {1} may be unused.
const char* const kHatefulTemplates[] = {
    "gas the {0}s",
    "the {0}s are destroying this country",
    "deport every {0} now",
    "(((they))) let the {0}s take over",
    "war on the {0}s is coming #maga",
    "purge the {0}s and the {1}s",
    "i hate the {0}s so much",
    "send the {0}s back where they came from",
    "no more {0}s in our land #mawa",
    "the {0}s and the {1}s must go",
};

const char* const kBenignTemplates[] = {
    "i {0} my mom everyday",
    "just installed {0} on my new laptop",
    "searching {0} for pasta recipes",
    "my {0} call dropped twice today",
    "found a {0} wallpaper for my desktop",
    "ate a whole bag of {0}s after lunch",
    "a {0} landed on a flower in the garden",
    "the {0} results page loaded slowly",
    "lost my {0} password again",
    "video chat on {0} with grandma tonight",
};

const char* const kFillers[] = {"today", "again", "honestly", "right now",
                                "for real"};

constexpr std::chrono::sys_days kWindowStart =
    std::chrono::sys_days{std::chrono::year{2016} / 9 / 23};
constexpr std::chrono::sys_days kWindowEnd =
    std::chrono::sys_days{std::chrono::year{2016} / 10 / 18};
constexpr std::chrono::sys_days kSpikeDay =
    std::chrono::sys_days{std::chrono::year{2016} / 10 / 4};

template <std::size_t N>
const char* pick(Rng& rng, const char* const (&pool)[N]) {
  return pool[draw_below(rng, N)];
}

std::string fill_template(const std::string& tmpl, Rng& rng) {
  const char* first = pick(rng, kCodewords);
  const char* second = first;
  while (second == first) second = pick(rng, kCodewords);

  std::string text = tmpl;
  auto replace_all = [&](const std::string& slot, const std::string& value) {
    std::size_t pos = 0;
    while ((pos = text.find(slot, pos)) != std::string::npos) {
      text.replace(pos, slot.size(), value);
      pos += value.size();
    }
  };
  replace_all("{0}", first);
  replace_all("{1}", second);
  if (draw_below(rng, 2) == 0) {
    text += ' ';
    text += pick(rng, kFillers);
  }
  return text;
}

std::string make_text(Label label, Rng& rng) {
  const char* tmpl = label == Label::Hateful ? pick(rng, kHatefulTemplates)
                                             : pick(rng, kBenignTemplates);
  return fill_template(tmpl, rng);
}

UtcSeconds random_instant(std::chrono::sys_days day, Rng& rng) {
  return day + std::chrono::seconds{draw_below(rng, 86400)};
}

UtcSeconds random_instant_in_window(Rng& rng) {
  const auto span =
      std::chrono::duration_cast<std::chrono::days>(kWindowEnd - kWindowStart)
          .count();
  const auto day = kWindowStart + std::chrono::days{draw_below(
                                      rng, static_cast<std::uint64_t>(span) + 1)};
  return random_instant(day, rng);
}

std::string sequential_id(const char* prefix, std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%04zu", prefix, n);
  return buf;
}

}  // namespace

LabeledSet SyntheticCorpus::labeled() const {
  LabeledSet set;
  set.items.reserve(tweets.size());
  for (std::size_t i = 0; i < tweets.size(); ++i) {
    set.items.push_back({tweets[i], labels[i]});
    (labels[i] == Label::Hateful ? set.hateful_count : set.benign_count) += 1;
  }
  return set;
}

SyntheticCorpus make_training_corpus(std::uint64_t seed,
                                     std::size_t tweet_count) {
  Rng rng(seed);
  SyntheticCorpus corpus;
  const std::size_t hateful = tweet_count / 2;

  std::vector<Label> plan(tweet_count, Label::Benign);
  std::fill(plan.begin(), plan.begin() + hateful, Label::Hateful);
  deterministic_shuffle(plan, rng);

  for (std::size_t i = 0; i < tweet_count; ++i) {
    Tweet tweet;
    tweet.id = sequential_id("t", i + 1);
    tweet.handle = "user" + std::to_string(draw_below(rng, 20));
    tweet.timestamp = random_instant_in_window(rng);
    tweet.text = make_text(plan[i], rng);
    corpus.tweets.push_back(std::move(tweet));
    corpus.labels.push_back(plan[i]);
  }
  return corpus;
}

FieldCorpus make_field_corpus(std::uint64_t seed) {
  Rng rng(seed);
  FieldCorpus field;
  field.spike_day = kSpikeDay;
  field.planted_handles = {"aggressor_a", "aggressor_b"};

  struct Planned {
    std::string handle;
    Label label;
    bool on_spike;
  };
  std::vector<Planned> plan;

  // Two handles post well past the aggressor threshold; their hateful
  // tweets concentrate on the spike day.
  auto plant = [&](const std::string& handle, int hateful, int benign,
                   int on_spike) {
    for (int i = 0; i < hateful; ++i) {
      plan.push_back({handle, Label::Hateful, i < on_spike});
    }
    for (int i = 0; i < benign; ++i) plan.push_back({handle, Label::Benign, false});
  };
  plant("aggressor_a", 7, 2, 5);
  plant("aggressor_b", 6, 3, 4);

  // 18 ordinary handles; a handful slip in one hateful tweet each, far
  // below the threshold.
  for (int u = 1; u <= 18; ++u) {
    char name[16];
    std::snprintf(name, sizeof(name), "user%02d", u);
    const int benign = 8 + static_cast<int>(draw_below(rng, 3));
    plant(name, u <= 6 ? 1 : 0, benign, u <= 3 ? 1 : 0);
  }

  deterministic_shuffle(plan, rng);

  for (std::size_t i = 0; i < plan.size(); ++i) {
    Tweet tweet;
    tweet.id = sequential_id("f", i + 1);
    tweet.handle = plan[i].handle;
    tweet.timestamp = plan[i].on_spike ? random_instant(kSpikeDay, rng)
                                       : random_instant_in_window(rng);
    tweet.text = make_text(plan[i].label, rng);
    field.corpus.tweets.push_back(std::move(tweet));
    field.corpus.labels.push_back(plan[i].label);
  }
  return field;
}

}  // namespace hatecode
