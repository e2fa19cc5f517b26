#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "ompstat/partitions.hpp"
#include "ompstat/statistics.hpp"

namespace ompstat {

// The switch map t_i exchanges the multiplicities of the letters i and i+1
// while preserving descent sets.  On plain words it freezes every contiguous
// pair (i+1)i and swaps i^a(i+1)^b -> i^b(i+1)^a on the remaining maximal
// runs.  On ordered multiset partitions the frozen units are i-drops in the
// segmented word w(mu), and the segmentation near each run is adjusted by a
// three-case rule so that the transformed segmented word is again in the
// image of w.

// Intervals are 1-based inclusive letter positions, independent of the
// segmentation.
struct Interval {
  int lo = 0, hi = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Overline {
  int lo = 0, hi = 0;
  int count_low = 0;   // number of letters equal to i
  int count_high = 0;  // number of letters equal to i+1
  friend bool operator==(const Overline&, const Overline&) = default;
};

struct Decoration {
  SegmentedWord base;
  int letter = 0;
  std::vector<Interval> drops;
  std::vector<Overline> overlines;
};

// t_i on plain words.
inline Word word_switch(const Word& w, int i) {
  if (i < 1) throw std::invalid_argument("word_switch: letter must be >= 1");
  const std::size_t n = w.size();
  std::vector<bool> frozen(n, false);
  for (std::size_t p = 0; p + 1 < n; ++p)
    if (w.letters[p] == i + 1 && w.letters[p + 1] == i)
      frozen[p] = frozen[p + 1] = true;
  Word out = w;
  std::size_t p = 0;
  while (p < n) {
    bool in_run = !frozen[p] && (w.letters[p] == i || w.letters[p] == i + 1);
    if (!in_run) {
      ++p;
      continue;
    }
    std::size_t q = p;
    int a = 0, b = 0;
    while (q < n && !frozen[q] &&
           (w.letters[q] == i || w.letters[q] == i + 1)) {
      w.letters[q] == i ? ++a : ++b;
      ++q;
    }
    // unfrozen runs always read i^a (i+1)^b; rewrite as i^b (i+1)^a
    for (std::size_t t = p; t < q; ++t)
      out.letters[t] = t - p < static_cast<std::size_t>(b) ? i : i + 1;
    p = q;
  }
  return out;
}

// All i-drops of a segmented word, left to right.  An i-drop is a contiguous
// subword (i+1) j_1 .. j_l i with no j equal to i or i+1, where either the
// whole subword or its prefix (i+1) j_1 .. j_l is a segment (in the latter
// case the trailing i is the first letter of the next segment).
inline std::vector<Interval> find_drops(const SegmentedWord& sw, int i) {
  std::vector<Interval> drops;
  const int k = sw.segment_count();
  for (int s = 0; s < k; ++s) {
    auto seg = sw.segment(s);
    if (seg.empty() || seg.front() != i + 1) continue;
    int start = static_cast<int>(sw.segment_start(s)) + 1;
    bool interior_clean = true;
    for (std::size_t t = 1; t + 1 < seg.size(); ++t)
      if (seg[t] == i || seg[t] == i + 1) interior_clean = false;
    if (seg.size() >= 2 && seg.back() == i && interior_clean) {
      // whole segment is the drop
      drops.push_back({start, start + static_cast<int>(seg.size()) - 1});
      continue;
    }
    bool tail_clean = true;
    for (std::size_t t = 1; t < seg.size(); ++t)
      if (seg[t] == i || seg[t] == i + 1) tail_clean = false;
    if (tail_clean && s + 1 < k && sw.segment(s + 1).front() == i)
      drops.push_back({start, start + static_cast<int>(seg.size())});
  }
  return drops;
}

// Underlines the i-drops, then overlines the maximal contiguous runs of
// leftover letters in {i, i+1}.  Throws if an overline fails to read
// i^a (i+1)^b, which means the input was not in the image of w.
inline Decoration decorate(const SegmentedWord& sw, int i) {
  Decoration d;
  d.base = sw;
  d.letter = i;
  d.drops = find_drops(sw, i);
  const int n = static_cast<int>(sw.word.size());
  std::vector<bool> in_drop(static_cast<std::size_t>(n) + 1, false);
  for (const Interval& dr : d.drops)
    for (int p = dr.lo; p <= dr.hi; ++p)
      in_drop[static_cast<std::size_t>(p)] = true;
  auto letter_at = [&](int p) {
    return sw.word.letters[static_cast<std::size_t>(p) - 1];
  };
  int p = 1;
  while (p <= n) {
    if (in_drop[static_cast<std::size_t>(p)] ||
        (letter_at(p) != i && letter_at(p) != i + 1)) {
      ++p;
      continue;
    }
    Overline o;
    o.lo = p;
    while (p <= n && !in_drop[static_cast<std::size_t>(p)] &&
           (letter_at(p) == i || letter_at(p) == i + 1)) {
      letter_at(p) == i ? ++o.count_low : ++o.count_high;
      ++p;
    }
    o.hi = p - 1;
    for (int t = o.lo; t < o.hi; ++t)
      if (letter_at(t) == i + 1 && letter_at(t + 1) == i)
        throw std::invalid_argument(
            "decorate: overline not of the form i^a (i+1)^b; "
            "input is not in the image of the segmented-word map");
    d.overlines.push_back(o);
  }
  return d;
}

// Applies the three-case transformation to the decorated word, producing the
// segmented word of t_i(mu).
inline SegmentedWord switch_segmented(const SegmentedWord& sw, int i) {
  Decoration d = decorate(sw, i);
  const int n = static_cast<int>(sw.word.size());
  std::vector<int> letters = sw.word.letters;
  // cut[p] == true means a segment boundary after position p (1-based)
  std::vector<bool> cut(static_cast<std::size_t>(n) + 1, false);
  {
    int pos = 0;
    for (int s = 0; s + 1 < sw.segment_count(); ++s) {
      pos += sw.segmentation.parts[static_cast<std::size_t>(s)];
      cut[static_cast<std::size_t>(pos)] = true;
    }
  }
  auto drop_ends_at = [&](int p) {
    for (const Interval& dr : d.drops)
      if (dr.hi == p) return true;
    return false;
  };
  auto set_letters = [&](int lo, int hi, int low_count) {
    for (int p = lo; p <= hi; ++p)
      letters[static_cast<std::size_t>(p) - 1] = p - lo < low_count ? i : i + 1;
  };
  for (const Overline& o : d.overlines) {
    const int p = o.lo, q = o.hi, a = o.count_low, b = o.count_high;
    if (a > 0 && b > 0) {
      // Case 3: i^a (i+1)^b -> i^b (i+1)^a.  Cuts inside the run are forced
      // between equal letters; the optional cut between the two halves moves
      // with the boundary.
      bool mid = cut[static_cast<std::size_t>(p + a - 1)];
      for (int t = p; t < q; ++t)
        cut[static_cast<std::size_t>(t)] = true;
      cut[static_cast<std::size_t>(p + b - 1)] = mid;
      set_letters(p, q, b);
    } else if (a > 0) {
      // Case 1: i^a -> (i+1)^a.
      if (drop_ends_at(p - 1) && !cut[static_cast<std::size_t>(p - 2)]) {
        // drop was a whole segment: detach its trailing i and fuse it with
        // the first traded letter
        cut[static_cast<std::size_t>(p - 2)] = true;
        cut[static_cast<std::size_t>(p - 1)] = false;
      }
      set_letters(p, q, 0);
    } else if (b > 0) {
      // Case 2: (i+1)^b -> i^b.
      if (drop_ends_at(p - 1) && !cut[static_cast<std::size_t>(p - 1)]) {
        // inverse of the Case 1 adjustment
        cut[static_cast<std::size_t>(p - 2)] = false;
        cut[static_cast<std::size_t>(p - 1)] = true;
      }
      set_letters(p, q, b);
    }
  }
  SegmentedWord out;
  out.word.letters = std::move(letters);
  int prev = 0;
  for (int p = 1; p <= n; ++p)
    if (p == n || cut[static_cast<std::size_t>(p)]) {
      out.segmentation.parts.push_back(p - prev);
      prev = p;
    }
  return out;
}

// t_i on ordered multiset partitions: blocks are read off the segments of the
// transformed segmented word.
inline OrderedMultisetPartition omp_switch(const OrderedMultisetPartition& mu,
                                           int i) {
  if (i < 1) throw std::invalid_argument("omp_switch: letter must be >= 1");
  if (mu.block_count() == 0) return mu;
  SegmentedWord transformed = switch_segmented(segmented_word(mu), i);
  OrderedMultisetPartition out;
  out.blocks.reserve(static_cast<std::size_t>(transformed.segment_count()));
  for (int s = 0; s < transformed.segment_count(); ++s) {
    auto seg = transformed.segment(s);
    std::vector<int> block(seg.begin(), seg.end());
    std::sort(block.begin(), block.end());
    out.blocks.push_back(std::move(block));
  }
  // The transformed word must itself be the segmented word of the result;
  // this is the strongest internal consistency check available.
  assert(segmented_word(out) == transformed);
  return out;
}

}  // namespace ompstat
