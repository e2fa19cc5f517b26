#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "ompstat/partitions.hpp"

namespace ompstat {

// Descent positions of a word, 1-based, strictly increasing.
struct DescentSet {
  std::vector<int> positions;
  friend bool operator==(const DescentSet&, const DescentSet&) = default;
};

inline long long inv_word(const Word& w) {
  long long inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w.letters[i] > w.letters[j]) ++inv;
  return inv;
}

inline DescentSet descent_set(const Word& w) {
  DescentSet d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w.letters[i] > w.letters[i + 1])
      d.positions.push_back(static_cast<int>(i) + 1);
  return d;
}

inline long long maj_word(const Word& w) {
  long long maj = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w.letters[i] > w.letters[i + 1]) maj += static_cast<long long>(i) + 1;
  return maj;
}

// Statistics on segmented words forget the segmentation.
inline long long inv_word(const SegmentedWord& sw) { return inv_word(sw.word); }
inline DescentSet descent_set(const SegmentedWord& sw) {
  return descent_set(sw.word);
}
inline long long maj_word(const SegmentedWord& sw) { return maj_word(sw.word); }

// An inversion of mu is a pair i < j with i = min(B_m) and j in B_l for some
// l < m, counted with multiplicity over blocks.
inline long long inv_omp(const OrderedMultisetPartition& mu) {
  long long inv = 0;
  for (std::size_t m = 1; m < mu.blocks.size(); ++m) {
    int lo = mu.blocks[m].front();  // blocks are sorted increasing
    for (std::size_t l = 0; l < m; ++l)
      for (int j : mu.blocks[l])
        if (j > lo) ++inv;
  }
  return inv;
}

// All words obtained by permuting letters within the blocks of mu, as an
// odometer over per-block permutations (rightmost block advances fastest).
class RearrangementStream {
 public:
  explicit RearrangementStream(const OrderedMultisetPartition& mu)
      : blocks_(mu.blocks) {}

  bool next(Word& out) {
    if (done_) return false;
    if (!started_) {
      started_ = true;
      emit(out);
      return true;
    }
    int j = static_cast<int>(blocks_.size()) - 1;
    while (j >= 0 && !std::next_permutation(
                         blocks_[static_cast<std::size_t>(j)].begin(),
                         blocks_[static_cast<std::size_t>(j)].end()))
      --j;  // wrapped blocks reset to sorted order as a side effect
    if (j < 0) {
      done_ = true;
      return false;
    }
    emit(out);
    return true;
  }

 private:
  void emit(Word& out) const {
    out.letters.clear();
    for (const auto& b : blocks_)
      out.letters.insert(out.letters.end(), b.begin(), b.end());
  }

  std::vector<std::vector<int>> blocks_;
  bool started_ = false, done_ = false;
};

// The map from ordered multiset partitions to segmented words.  The last
// segment is the last block written increasing; each earlier segment is the
// cyclic rotation j_{m+1}..j_a j_1..j_m of its block, where m is maximal with
// j_m <= r and r is the first letter of the segment to the right (m = 0 when
// no element qualifies).
inline SegmentedWord segmented_word(const OrderedMultisetPartition& mu) {
  SegmentedWord sw;
  int k = mu.block_count();
  if (k == 0) return sw;
  sw.segmentation = mu.shape();
  std::vector<std::vector<int>> segments(static_cast<std::size_t>(k));
  segments[static_cast<std::size_t>(k) - 1] = mu.blocks.back();
  for (int i = k - 2; i >= 0; --i) {
    const std::vector<int>& b = mu.blocks[static_cast<std::size_t>(i)];
    int r = segments[static_cast<std::size_t>(i) + 1].front();
    std::size_t m = 0;
    while (m < b.size() && b[m] <= r) ++m;
    std::vector<int>& seg = segments[static_cast<std::size_t>(i)];
    seg.assign(b.begin() + static_cast<std::ptrdiff_t>(m), b.end());
    seg.insert(seg.end(), b.begin(), b.begin() + static_cast<std::ptrdiff_t>(m));
  }
  for (const auto& seg : segments)
    sw.word.letters.insert(sw.word.letters.end(), seg.begin(), seg.end());
  return sw;
}

// minimaj via the segmented word (linear time).
inline long long minimaj(const OrderedMultisetPartition& mu) {
  return maj_word(segmented_word(mu));
}

// Test oracle: minimum of maj over the whole rearrangement class.
inline long long minimaj_brute(const OrderedMultisetPartition& mu) {
  long long best = std::numeric_limits<long long>::max();
  Word w;
  for (RearrangementStream rs(mu); rs.next(w);)
    best = std::min(best, maj_word(w));
  return best == std::numeric_limits<long long>::max() ? 0 : best;
}

// Relabels the letters of pairwise disjoint blocks to 1..N preserving
// relative order.
inline OrderedMultisetPartition standardize(
    const std::vector<std::vector<int>>& blocks) {
  std::map<int, int> rank;
  for (const auto& b : blocks)
    for (int x : b)
      if (!rank.emplace(x, 0).second)
        throw std::invalid_argument("standardize: blocks are not disjoint");
  int next = 1;
  for (auto& [letter, r] : rank) r = next++;
  OrderedMultisetPartition out;
  out.blocks.reserve(blocks.size());
  for (const auto& b : blocks) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int x : b) nb.push_back(rank.at(x));
    std::sort(nb.begin(), nb.end());
    if (nb.empty())
      throw std::invalid_argument("standardize: empty block");
    out.blocks.push_back(std::move(nb));
  }
  return out;
}

// Decrement every letter by 1 modulo m (so 1 wraps to m).
inline Word cycle_word(const Word& w, int m) {
  Word out = w;
  for (int& x : out.letters) {
    if (x > m) throw std::invalid_argument("cycle_word: letter exceeds m");
    x = x > 1 ? x - 1 : m;
  }
  return out;
}

inline SegmentedWord cycle_segmented(const SegmentedWord& sw, int m) {
  return SegmentedWord{cycle_word(sw.word, m), sw.segmentation};
}

inline OrderedMultisetPartition cycle_omp(const OrderedMultisetPartition& mu,
                                          int m) {
  OrderedMultisetPartition out;
  out.blocks.reserve(mu.blocks.size());
  for (const auto& b : mu.blocks) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int x : b) {
      if (x > m) throw std::invalid_argument("cycle_omp: letter exceeds m");
      nb.push_back(x > 1 ? x - 1 : m);
    }
    std::sort(nb.begin(), nb.end());
    out.blocks.push_back(std::move(nb));
  }
  return out;
}

}  // namespace ompstat
