#pragma once

// Seeded corpus of random nonzero words for confluence, soundness and
// round-trip sweeps.

#include "qsl2/words.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace qsl2 {

struct CorpusOptions {
  std::size_t count = 500;
  std::uint64_t seed = 7;
  int max_length = 5;
  int max_power = 2;
  int max_n = 5;
};

inline std::vector<Word> random_word_corpus(const CorpusOptions& opt = {}) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> pick_n(1, opt.max_n), pick_len(0, opt.max_length), pick_pow(1, opt.max_power),
      pick_kind(0, 1);
  std::vector<Word> out;
  out.reserve(opt.count);
  while (out.size() < opt.count) {
    const WeightConfig cfg{pick_n(rng)};
    const auto ws = cfg.weights();
    std::uniform_int_distribution<std::size_t> pick_w(0, ws.size() - 1);
    const int source = ws[pick_w(rng)];
    std::vector<Generator> letters(static_cast<std::size_t>(pick_len(rng)));
    for (auto& g : letters) g = Generator{pick_kind(rng) ? Kind::F : Kind::E, pick_pow(rng)};
    if (auto w = make_word(cfg, source, std::move(letters))) out.push_back(std::move(*w));
  }
  return out;
}

}  // namespace qsl2
