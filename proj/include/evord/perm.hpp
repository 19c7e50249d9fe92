#pragma once

// Permutations of event labels and sets of observed orderings.
//
// A permutation is stored in one-line notation and read as an observed
// sequence: image[i] is the label of the i-th event an observer sees.
// Relabeling events by lambda therefore acts on the left (lambda o pi),
// while reversing the time order acts on the right (pi o reversal).

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evord {

class Permutation {
 public:
  static constexpr int kMaxSize = 16;

  /// Empty permutation (size 0). Only useful as a placeholder.
  Permutation() = default;

  /// Validates that `image` is a bijection on {1..n}, 1 <= n <= kMaxSize.
  explicit Permutation(std::span<const int> image);
  Permutation(std::initializer_list<int> image);

  static Permutation identity(int n);
  /// The order-reversing permutation (n, n-1, ..., 1).
  static Permutation reversal(int n);

  int size() const { return n_; }
  /// 1-based evaluation pi(i).
  int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  /// 1-based position of `value`, i.e. pi^{-1}(value).
  int position_of(int value) const;

  bool is_identity() const;
  std::vector<int> image() const;

  /// "(2,3,4,5,1)"
  std::string str() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && a.image_ == b.image_;
  }
  /// Lexicographic on image arrays; shorter permutations sort first.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return a.image_ <=> b.image_;
  }

 private:
  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation inverse(const Permutation& p);

  std::array<std::uint8_t, kMaxSize> image_{};
  std::uint8_t n_ = 0;
};

/// result(i) = p(q(i)). Throws SizeMismatch when sizes differ.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

/// All permutations of {1..n} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

struct PairIndex {
  int j = 0;
  int k = 0;
  friend auto operator<=>(const PairIndex&, const PairIndex&) = default;
};

/// All pairs (j,k), 1 <= j < k <= n, lexicographic.
std::vector<PairIndex> all_pairs(int n);

/// {(i,j) : i < j, p(j) < p(i)}, sorted.
std::vector<PairIndex> inversion_set(const Permutation& p);
int inversion_count(const Permutation& p);

/// Sorted set of distinct permutations of a common size.
class PermSet {
 public:
  PermSet() = default;
  /// Sorts; throws SizeMismatch on ragged sizes and Error on duplicates.
  explicit PermSet(std::vector<Permutation> members);
  PermSet(std::initializer_list<Permutation> members);

  const std::vector<Permutation>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  int n() const { return members_.empty() ? 0 : members_.front().size(); }
  bool contains(const Permutation& p) const;
  bool contains_identity() const;

  /// Members separated by ";", e.g. "(1,2,3);(2,1,3)".
  std::string str() const;

  friend bool operator==(const PermSet&, const PermSet&) = default;
  friend auto operator<=>(const PermSet& a, const PermSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<Permutation> members_;
};

/// pi_r Q pi_r.
PermSet time_reverse_set(const PermSet& q);

/// {p^{-1} : p in Q}.
PermSet inverse_set(const PermSet& q);

/// The identity-containing relabelings {p^{-1} o q : q in Q}, one per p in
/// Q in member order. Duplicates are retained.
std::vector<PermSet> translations(const PermSet& q);

/// Lexicographically least element of translations(q).
PermSet canonicalize(const PermSet& q);

/// Contains the identity and is closed under composition.
bool is_cyclic_group(const PermSet& q);

/// Necessary condition for realizability on a line: after relabeling so some
/// observer sees the identity, the sets of reversed event pairs of the
/// members can be arranged in an increasing chain.
bool chain_orderable(const PermSet& q);

/// The pair (j,k) of events is seen in reversed order (k before j).
inline bool reverses(const Permutation& p, int j, int k) {
  return p.position_of(j) > p.position_of(k);
}

}  // namespace evord
