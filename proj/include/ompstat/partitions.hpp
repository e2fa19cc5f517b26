#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ompstat {

// ---------------------------------------------------------------------------
// Value types
// ---------------------------------------------------------------------------

// A word over the positive integers.
struct Word {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

// A composition: finite sequence of positive parts.
struct Composition {
  std::vector<int> parts;

  int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int length() const { return static_cast<int>(parts.size()); }
  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

// A weak composition: parts may be zero.
struct WeakComposition {
  std::vector<int> parts;

  int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int length() const { return static_cast<int>(parts.size()); }
  friend bool operator==(const WeakComposition&, const WeakComposition&) =
      default;
  friend auto operator<=>(const WeakComposition&, const WeakComposition&) =
      default;
};

inline WeakComposition ones(int n) {
  return WeakComposition{std::vector<int>(static_cast<std::size_t>(n), 1)};
}

// A subset of [m], stored as a strictly increasing index sequence.
struct Subset {
  std::vector<int> elements;

  std::size_t size() const { return elements.size(); }
  friend bool operator==(const Subset&, const Subset&) = default;
};

// Indicator vector chi(S) of a subset S of [m].
inline WeakComposition subset_indicator(const Subset& s, int m) {
  WeakComposition chi{std::vector<int>(static_cast<std::size_t>(m), 0)};
  for (int e : s.elements) {
    if (e < 1 || e > m)
      throw std::invalid_argument("subset_indicator: element out of range");
    chi.parts[static_cast<std::size_t>(e) - 1] = 1;
  }
  return chi;
}

// A sequence of nonempty sets of positive letters; each block is stored
// strictly increasing, so equality is structural.  Ordered set partitions
// are the weight-(1,...,1) case.
struct OrderedMultisetPartition {
  std::vector<std::vector<int>> blocks;

  int size() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return n;
  }

  int block_count() const { return static_cast<int>(blocks.size()); }

  Composition shape() const {
    Composition a;
    a.parts.reserve(blocks.size());
    for (const auto& b : blocks) a.parts.push_back(static_cast<int>(b.size()));
    return a;
  }

  int max_letter() const {
    int m = 0;
    for (const auto& b : blocks)
      for (int x : b) m = std::max(m, x);
    return m;
  }

  // Letter multiplicities over the alphabet [m].
  WeakComposition weight(int m) const {
    WeakComposition w{std::vector<int>(static_cast<std::size_t>(m), 0)};
    for (const auto& b : blocks)
      for (int x : b) {
        if (x < 1 || x > m)
          throw std::invalid_argument("weight: letter out of range");
        ++w.parts[static_cast<std::size_t>(x) - 1];
      }
    return w;
  }

  WeakComposition weight() const { return weight(max_letter()); }

  friend bool operator==(const OrderedMultisetPartition&,
                         const OrderedMultisetPartition&) = default;
  friend auto operator<=>(const OrderedMultisetPartition&,
                          const OrderedMultisetPartition&) = default;
};

// A word together with a composition marking contiguous segments.
struct SegmentedWord {
  Word word;
  Composition segmentation;

  int segment_count() const { return segmentation.length(); }

  // 0-based start offset of segment i (0-based).
  std::size_t segment_start(int i) const {
    std::size_t s = 0;
    for (int j = 0; j < i; ++j)
      s += static_cast<std::size_t>(segmentation.parts[j]);
    return s;
  }

  std::span<const int> segment(int i) const {
    return std::span<const int>(word.letters)
        .subspan(segment_start(i),
                 static_cast<std::size_t>(segmentation.parts[i]));
  }

  friend bool operator==(const SegmentedWord&, const SegmentedWord&) = default;
};

inline void validate_segmented(const SegmentedWord& sw) {
  if (static_cast<std::size_t>(sw.segmentation.sum()) != sw.word.size())
    throw std::invalid_argument("segmentation does not cover the word");
  for (int p : sw.segmentation.parts)
    if (p <= 0) throw std::invalid_argument("empty segment");
}

// ---------------------------------------------------------------------------
// Enumerators.  Large families are exposed as single-consumer streams with a
// next() pull interface; nothing is materialized wholesale.
// ---------------------------------------------------------------------------

// Compositions of n, first part largest first: (3),(2,1),(1,2),(1,1,1).
class CompositionStream {
 public:
  explicit CompositionStream(int n) : n_(n) {
    if (n_ < 0) throw std::invalid_argument("negative n");
  }

  bool next(Composition& out) {
    if (done_) return false;
    if (!started_) {
      started_ = true;
      cur_.parts.clear();
      if (n_ > 0) cur_.parts.push_back(n_);
      out = cur_;
      done_ = n_ == 0;  // single empty composition of 0
      return true;
    }
    // Successor: split at the rightmost part >= 2.
    int j = static_cast<int>(cur_.parts.size()) - 1;
    while (j >= 0 && cur_.parts[static_cast<std::size_t>(j)] == 1) --j;
    if (j < 0) {
      done_ = true;
      return false;
    }
    int tail = 0;
    for (std::size_t t = static_cast<std::size_t>(j); t < cur_.parts.size();
         ++t)
      tail += cur_.parts[t];
    cur_.parts.resize(static_cast<std::size_t>(j) + 1);
    cur_.parts[static_cast<std::size_t>(j)] -= 1;
    cur_.parts.push_back(tail - cur_.parts[static_cast<std::size_t>(j)]);
    out = cur_;
    return true;
  }

 private:
  int n_;
  Composition cur_;
  bool started_ = false, done_ = false;
};

// Weak compositions of n into exactly m parts: (2,0),(1,1),(0,2).
class WeakCompositionStream {
 public:
  WeakCompositionStream(int n, int m) : n_(n), m_(m) {
    if (n_ < 0 || m_ < 0) throw std::invalid_argument("negative arguments");
  }

  bool next(WeakComposition& out) {
    if (done_) return false;
    if (!started_) {
      started_ = true;
      if (m_ == 0) {
        done_ = true;
        if (n_ != 0) return false;
        out = WeakComposition{};
        return true;
      }
      cur_.parts.assign(static_cast<std::size_t>(m_), 0);
      cur_.parts[0] = n_;
      out = cur_;
      return true;
    }
    // Successor: decrement the rightmost positive part before the last slot,
    // and dump everything after it into the next slot.
    int j = m_ - 2;
    while (j >= 0 && cur_.parts[static_cast<std::size_t>(j)] == 0) --j;
    if (j < 0) {
      done_ = true;
      return false;
    }
    int tail = 0;
    for (std::size_t t = static_cast<std::size_t>(j) + 1;
         t < cur_.parts.size(); ++t) {
      tail += cur_.parts[t];
      cur_.parts[t] = 0;
    }
    cur_.parts[static_cast<std::size_t>(j)] -= 1;
    cur_.parts[static_cast<std::size_t>(j) + 1] = tail + 1;
    out = cur_;
    return true;
  }

 private:
  int n_, m_;
  WeakComposition cur_;
  bool started_ = false, done_ = false;
};

// Size-k subsets of [m] in lexicographic order.
class SubsetStream {
 public:
  SubsetStream(int m, int k) : m_(m), k_(k) {}

  bool next(Subset& out) {
    if (done_) return false;
    if (!started_) {
      started_ = true;
      if (k_ < 0 || k_ > m_) {
        done_ = true;
        return false;
      }
      cur_.elements.resize(static_cast<std::size_t>(k_));
      std::iota(cur_.elements.begin(), cur_.elements.end(), 1);
      out = cur_;
      return true;
    }
    int j = k_ - 1;
    while (j >= 0 && cur_.elements[static_cast<std::size_t>(j)] == m_ - k_ + 1 + j)
      --j;
    if (j < 0) {
      done_ = true;
      return false;
    }
    ++cur_.elements[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < k_; ++t)
      cur_.elements[static_cast<std::size_t>(t)] =
          cur_.elements[static_cast<std::size_t>(t) - 1] + 1;
    out = cur_;
    return true;
  }

 private:
  int m_, k_;
  Subset cur_;
  bool started_ = false, done_ = false;
};

// All words with beta_i copies of the letter i, in lexicographic order.
class WordStream {
 public:
  explicit WordStream(const WeakComposition& beta) {
    for (int i = 0; i < beta.length(); ++i) {
      if (beta.parts[static_cast<std::size_t>(i)] < 0)
        throw std::invalid_argument("negative multiplicity");
      cur_.letters.insert(cur_.letters.end(),
                          static_cast<std::size_t>(
                              beta.parts[static_cast<std::size_t>(i)]),
                          i + 1);
    }
  }

  bool next(Word& out) {
    if (done_) return false;
    if (!started_) {
      started_ = true;
      out = cur_;
      return true;
    }
    if (!std::next_permutation(cur_.letters.begin(), cur_.letters.end())) {
      done_ = true;
      return false;
    }
    out = cur_;
    return true;
  }

 private:
  Word cur_;
  bool started_ = false, done_ = false;
};

// Ordered multiset partitions of a given weight, optionally constrained to an
// exact block count or an exact shape.  Enumeration is lexicographic with
// blocks compared as sequences.  Lazy depth-first search; each level holds the
// candidate blocks (subsets of the current support) in lexicographic order.
class OmpStream {
 public:
  static OmpStream all(WeakComposition beta) {
    return OmpStream(std::move(beta), std::nullopt, std::nullopt);
  }

  static OmpStream with_blocks(WeakComposition beta, int k) {
    if (k < 0) throw std::invalid_argument("negative block count");
    return OmpStream(std::move(beta), k, std::nullopt);
  }

  static OmpStream with_shape(WeakComposition beta, Composition shape) {
    if (shape.sum() != beta.sum())
      throw std::invalid_argument("shape does not compose the weight");
    for (int p : shape.parts)
      if (p <= 0) throw std::invalid_argument("shape parts must be positive");
    int k = shape.length();
    return OmpStream(std::move(beta), k, std::move(shape));
  }

  bool next(OrderedMultisetPartition& out) {
    if (done_) return false;
    if (!started_) {
      started_ = true;
      if (complete()) {  // the empty partition (n = 0)
        out = OrderedMultisetPartition{};
        done_ = true;
        return true;
      }
      if (!extendable()) {
        done_ = true;
        return false;
      }
      push_level();
    }
    while (!stack_.empty()) {
      Level& level = stack_.back();
      if (level.applied) {
        unapply(level.candidates[level.idx]);
        level.applied = false;
        ++level.idx;
      }
      if (level.idx >= level.candidates.size()) {
        stack_.pop_back();
        continue;
      }
      apply(level.candidates[level.idx]);
      level.applied = true;
      if (complete()) {
        out = OrderedMultisetPartition{blocks_};
        return true;
      }
      if (extendable()) push_level();
      // otherwise: dead end; the loop will unapply and advance
    }
    done_ = true;
    return false;
  }

 private:
  OmpStream(WeakComposition beta, std::optional<int> k,
            std::optional<Composition> shape)
      : remaining_(std::move(beta.parts)),
        k_(k),
        shape_(std::move(shape)),
        letters_left_(0) {
    for (int c : remaining_) {
      if (c < 0) throw std::invalid_argument("negative multiplicity");
      letters_left_ += c;
    }
  }

  struct Level {
    std::vector<std::vector<int>> candidates;
    std::size_t idx = 0;
    bool applied = false;
  };

  int depth() const { return static_cast<int>(blocks_.size()); }

  bool complete() const {
    if (letters_left_ != 0) return false;
    if (k_ && depth() != *k_) return false;
    return true;
  }

  // Can the current partial partition be extended to a valid one?
  bool extendable() const {
    if (letters_left_ == 0) return false;  // blocks are nonempty
    int max_mult = 0;
    for (int c : remaining_) max_mult = std::max(max_mult, c);
    if (k_) {
      int blocks_left = *k_ - depth();
      if (blocks_left <= 0) return false;
      if (letters_left_ < blocks_left) return false;
      if (max_mult > blocks_left) return false;
    }
    return true;
  }

  void push_level() {
    Level level;
    std::vector<int> support;
    for (std::size_t i = 0; i < remaining_.size(); ++i)
      if (remaining_[i] > 0) support.push_back(static_cast<int>(i) + 1);
    std::optional<int> want;
    if (shape_) want = shape_->parts[static_cast<std::size_t>(depth())];
    std::vector<int> cur;
    gen_subsets(support, 0, want, cur, level.candidates);
    stack_.push_back(std::move(level));
  }

  static void gen_subsets(const std::vector<int>& support, std::size_t from,
                          std::optional<int> exact_size, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
    for (std::size_t j = from; j < support.size(); ++j) {
      cur.push_back(support[j]);
      if (!exact_size || static_cast<int>(cur.size()) == *exact_size)
        out.push_back(cur);
      if (!exact_size || static_cast<int>(cur.size()) < *exact_size)
        gen_subsets(support, j + 1, exact_size, cur, out);
      cur.pop_back();
    }
  }

  void apply(const std::vector<int>& block) {
    for (int x : block) {
      --remaining_[static_cast<std::size_t>(x) - 1];
      --letters_left_;
    }
    blocks_.push_back(block);
  }

  void unapply(const std::vector<int>& block) {
    for (int x : block) {
      ++remaining_[static_cast<std::size_t>(x) - 1];
      ++letters_left_;
    }
    blocks_.pop_back();
  }

  std::vector<int> remaining_;
  std::optional<int> k_;
  std::optional<Composition> shape_;
  int letters_left_;
  std::vector<std::vector<int>> blocks_;
  std::vector<Level> stack_;
  bool started_ = false, done_ = false;
};

// ---------------------------------------------------------------------------
// Text notation
// ---------------------------------------------------------------------------

enum class ParseErrorKind { EmptyBlock, RepeatedLetter, MalformedToken };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t position,
             const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        kind_(kind),
        position_(position) {}

  ParseErrorKind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  ParseErrorKind kind_;
  std::size_t position_;
};

namespace detail {

// Parses one block/segment body into a letter sequence.  Contiguous digits
// when comma-free (letters 1..9), otherwise comma-separated decimal integers.
// `base` is the offset of `text` in the full input, for diagnostics.
inline std::vector<int> parse_letters(const std::string& text,
                                      std::size_t base) {
  std::vector<int> letters;
  bool comma_form = text.find(',') != std::string::npos;
  if (comma_form) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string::npos) end = text.size();
      std::string tok = text.substr(pos, end - pos);
      std::size_t tok_base = base + pos;
      // strip whitespace
      std::size_t b = tok.find_first_not_of(" \t");
      std::size_t e = tok.find_last_not_of(" \t");
      if (b == std::string::npos)
        throw ParseError(ParseErrorKind::MalformedToken, tok_base,
                         "empty letter token");
      tok = tok.substr(b, e - b + 1);
      long v = 0;
      for (char c : tok) {
        if (c < '0' || c > '9')
          throw ParseError(ParseErrorKind::MalformedToken, tok_base,
                           "letter is not a decimal integer");
        v = v * 10 + (c - '0');
        if (v > 1'000'000)
          throw ParseError(ParseErrorKind::MalformedToken, tok_base,
                           "letter too large");
      }
      if (v < 1)
        throw ParseError(ParseErrorKind::MalformedToken, tok_base,
                         "letters must be >= 1");
      letters.push_back(static_cast<int>(v));
      if (end == text.size()) break;
      pos = end + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c == ' ' || c == '\t') continue;
      if (c < '1' || c > '9')
        throw ParseError(ParseErrorKind::MalformedToken, base + i,
                         "expected a digit 1-9");
      letters.push_back(c - '0');
    }
  }
  return letters;
}

inline std::vector<std::pair<std::string, std::size_t>> split(
    const std::string& text, char sep) {
  std::vector<std::pair<std::string, std::size_t>> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(sep, pos);
    if (end == std::string::npos) {
      parts.emplace_back(text.substr(pos), pos);
      return parts;
    }
    parts.emplace_back(text.substr(pos, end - pos), pos);
    pos = end + 1;
  }
}

inline bool blank(const std::string& s) {
  return s.find_first_not_of(" \t") == std::string::npos;
}

}  // namespace detail

// "25|1|34" or "2,5|1|3,4"; blocks are re-sorted increasing.  The empty
// (whitespace-only) string denotes the empty partition.
inline OrderedMultisetPartition parse_omp(const std::string& text) {
  OrderedMultisetPartition mu;
  if (detail::blank(text)) return mu;
  for (auto& [body, base] : detail::split(text, '|')) {
    if (detail::blank(body))
      throw ParseError(ParseErrorKind::EmptyBlock, base, "empty block");
    std::vector<int> letters = detail::parse_letters(body, base);
    std::sort(letters.begin(), letters.end());
    for (std::size_t i = 1; i < letters.size(); ++i)
      if (letters[i] == letters[i - 1])
        throw ParseError(ParseErrorKind::RepeatedLetter, base,
                         "letter repeated within a block");
    mu.blocks.push_back(std::move(letters));
  }
  return mu;
}

// "725.6.481.39": '.'-separated segments; repeats are allowed inside a
// segment (it is a word, not a set).
inline SegmentedWord parse_segmented(const std::string& text) {
  SegmentedWord sw;
  if (detail::blank(text)) return sw;
  for (auto& [body, base] : detail::split(text, '.')) {
    if (detail::blank(body))
      throw ParseError(ParseErrorKind::EmptyBlock, base, "empty segment");
    std::vector<int> letters = detail::parse_letters(body, base);
    sw.segmentation.parts.push_back(static_cast<int>(letters.size()));
    sw.word.letters.insert(sw.word.letters.end(), letters.begin(),
                           letters.end());
  }
  return sw;
}

inline Word parse_word(const std::string& text) {
  return Word{detail::parse_letters(text, 0)};
}

namespace detail {

inline std::string print_letters(std::span<const int> letters,
                                 bool comma_form) {
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (comma_form && i > 0) s += ',';
    s += std::to_string(letters[i]);
  }
  return s;
}

}  // namespace detail

inline std::string print_omp(const OrderedMultisetPartition& mu) {
  bool comma_form = mu.max_letter() > 9;
  std::string s;
  for (int i = 0; i < mu.block_count(); ++i) {
    if (i > 0) s += '|';
    s += detail::print_letters(mu.blocks[static_cast<std::size_t>(i)],
                               comma_form);
  }
  return s;
}

inline std::string print_segmented(const SegmentedWord& sw) {
  bool comma_form =
      std::any_of(sw.word.letters.begin(), sw.word.letters.end(),
                  [](int x) { return x > 9; });
  std::string s;
  for (int i = 0; i < sw.segment_count(); ++i) {
    if (i > 0) s += '.';
    s += detail::print_letters(sw.segment(i), comma_form);
  }
  return s;
}

inline std::string print_word(const Word& w) {
  bool comma_form = std::any_of(w.letters.begin(), w.letters.end(),
                                [](int x) { return x > 9; });
  return detail::print_letters(w.letters, comma_form);
}

}  // namespace ompstat
