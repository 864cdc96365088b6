#pragma once

#include <random>
#include <string>
#include <vector>

namespace annulus {

// One Artin generator: position in [1, m-1], positive = true for sigma_i.
struct Crossing {
  int pos;
  bool positive;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct BraidStats {
  long long w = 0;           // colored writhe
  long long W = 0;           // quadratic writhe
  long long color_sum = 0;   // i_beta
  int components = 0;
  long long crossing_color_product = 0;  // sum over crossings of k_c * l_c
};

// A braid word on m strands with per-strand colors read at the bottom.
// Always balanced: the closure permutation maps the color sequence to itself.
class ColoredBraid {
 public:
  ColoredBraid(int strands, std::vector<Crossing> word, std::vector<int> colors);
  // Uncolored (all colors one). Word entries are signed positions: 3 = sigma_3,
  // -3 = sigma_3^{-1}.
  static ColoredBraid from_signed_word(int strands, const std::vector<int>& word,
                                       std::vector<int> colors = {});

  int strands() const { return m_; }
  const std::vector<Crossing>& word() const { return word_; }
  const std::vector<int>& colors() const { return colors_; }
  bool uncolored() const;

  // Colors present on the two strands entering crossing index c (bottom of
  // that crossing), in (pos, pos+1) order.
  std::pair<int, int> colors_at(int c) const;

  // Permutation induced on strand positions by the whole word (bottom to top).
  std::vector<int> permutation() const;

  BraidStats statistics() const;

  ColoredBraid conjugated(const ColoredBraid& g) const;
  ColoredBraid stabilized(bool positive) const;
  // Cyclic rotation: move the first k crossings to the end (a conjugation).
  ColoredBraid rotated(int k) const;
  ColoredBraid inverse() const;
  ColoredBraid mirror() const;  // flip every crossing sign

  std::vector<int> signed_word() const;
  std::string word_string() const;

 private:
  int m_;
  std::vector<Crossing> word_;
  std::vector<int> colors_;
};

// Uniformly random balanced braid; colors drawn from [1, max_color].
ColoredBraid random_braid(std::mt19937_64& rng, int max_strands, int max_crossings,
                          int max_color);

// Parse "1 1 -2" style signed words.
std::vector<int> parse_signed_word(const std::string& s);
std::vector<int> parse_color_list(const std::string& s);

} // namespace annulus
