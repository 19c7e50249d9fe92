#include "evord/perm.hpp"

#include <algorithm>
#include <numeric>

#include "evord/error.hpp"

namespace evord {

Permutation::Permutation(std::span<const int> image) {
  const auto n = image.size();
  if (n < 1 || n > static_cast<std::size_t>(kMaxSize)) {
    throw Error("permutation size " + std::to_string(n) + " outside 1.." +
                std::to_string(kMaxSize));
  }
  std::array<bool, kMaxSize + 1> seen{};
  for (std::size_t i = 0; i < n; ++i) {
    const int v = image[i];
    if (v < 1 || v > static_cast<int>(n) || seen[static_cast<std::size_t>(v)]) {
      throw Error("not a bijection on {1.." + std::to_string(n) + "}");
    }
    seen[static_cast<std::size_t>(v)] = true;
    image_[i] = static_cast<std::uint8_t>(v);
  }
  n_ = static_cast<std::uint8_t>(n);
}

Permutation::Permutation(std::initializer_list<int> image)
    : Permutation(std::span<const int>(image.begin(), image.size())) {}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(v);
}

Permutation Permutation::reversal(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation(v);
}

int Permutation::position_of(int value) const {
  for (int i = 0; i < n_; ++i) {
    if (image_[static_cast<std::size_t>(i)] == value) return i + 1;
  }
  return 0;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (image_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

std::vector<int> Permutation::image() const {
  return std::vector<int>(image_.begin(), image_.begin() + n_);
}

std::string Permutation::str() const {
  std::string out = "(";
  for (int i = 0; i < n_; ++i) {
    if (i) out += ',';
    out += std::to_string(image_[static_cast<std::size_t>(i)]);
  }
  out += ')';
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.n_ != q.n_) {
    throw SizeMismatch("compose: sizes " + std::to_string(p.n_) + " and " +
                       std::to_string(q.n_));
  }
  Permutation r;
  r.n_ = p.n_;
  for (int i = 0; i < p.n_; ++i) {
    r.image_[static_cast<std::size_t>(i)] =
        p.image_[static_cast<std::size_t>(q.image_[static_cast<std::size_t>(i)] - 1)];
  }
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r;
  r.n_ = p.n_;
  for (int i = 0; i < p.n_; ++i) {
    r.image_[static_cast<std::size_t>(p.image_[static_cast<std::size_t>(i)] - 1)] =
        static_cast<std::uint8_t>(i + 1);
  }
  return r;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<PairIndex> all_pairs(int n) {
  std::vector<PairIndex> out;
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) out.push_back({j, k});
  }
  return out;
}

std::vector<PairIndex> inversion_set(const Permutation& p) {
  std::vector<PairIndex> out;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) {
      if (p(j) < p(i)) out.push_back({i, j});
    }
  }
  return out;
}

int inversion_count(const Permutation& p) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) c += p(j) < p(i);
  }
  return c;
}

PermSet::PermSet(std::vector<Permutation> members) : members_(std::move(members)) {
  for (const auto& m : members_) {
    if (m.size() != members_.front().size()) {
      throw SizeMismatch("permutation set has ragged sizes");
    }
  }
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw Error("permutation set has duplicate members");
  }
}

PermSet::PermSet(std::initializer_list<Permutation> members)
    : PermSet(std::vector<Permutation>(members)) {}

bool PermSet::contains(const Permutation& p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

bool PermSet::contains_identity() const {
  // The identity is the lexicographically least permutation.
  return !members_.empty() && members_.front().is_identity();
}

std::string PermSet::str() const {
  std::string out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ';';
    out += members_[i].str();
  }
  return out;
}

PermSet time_reverse_set(const PermSet& q) {
  const auto r = Permutation::reversal(q.n());
  std::vector<Permutation> out;
  out.reserve(q.size());
  for (const auto& p : q.members()) out.push_back(compose(r, compose(p, r)));
  return PermSet(std::move(out));
}

PermSet inverse_set(const PermSet& q) {
  std::vector<Permutation> out;
  out.reserve(q.size());
  for (const auto& p : q.members()) out.push_back(inverse(p));
  return PermSet(std::move(out));
}

std::vector<PermSet> translations(const PermSet& q) {
  std::vector<PermSet> out;
  out.reserve(q.size());
  for (const auto& p : q.members()) {
    const auto pinv = inverse(p);
    std::vector<Permutation> t;
    t.reserve(q.size());
    for (const auto& m : q.members()) t.push_back(compose(pinv, m));
    out.emplace_back(std::move(t));
  }
  return out;
}

PermSet canonicalize(const PermSet& q) {
  if (q.size() == 0) return q;
  auto ts = translations(q);
  return *std::min_element(ts.begin(), ts.end());
}

bool is_cyclic_group(const PermSet& q) {
  if (!q.contains_identity()) return false;
  for (const auto& a : q.members()) {
    for (const auto& b : q.members()) {
      if (!q.contains(compose(a, b))) return false;
    }
  }
  return true;
}

namespace {

// Bit index of (j,k) in the lexicographic list of pairs.
std::uint64_t reversed_pair_bits(const Permutation& p) {
  std::uint64_t bits = 0;
  int idx = 0;
  for (int j = 1; j <= p.size(); ++j) {
    for (int k = j + 1; k <= p.size(); ++k, ++idx) {
      if (reverses(p, j, k)) bits |= std::uint64_t{1} << idx;
    }
  }
  return bits;
}

}  // namespace

bool chain_orderable(const PermSet& q) {
  if (q.n() > 11) throw Unsupported("chain_orderable: n > 11");
  for (const auto& t : translations(q)) {
    std::vector<std::uint64_t> sets;
    for (const auto& m : t.members()) sets.push_back(reversed_pair_bits(m));
    // Nested subsets are totally ordered by inclusion, so sorting by size
    // yields the only candidate chain.
    std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
      return __builtin_popcountll(a) < __builtin_popcountll(b);
    });
    bool chain = true;
    for (std::size_t i = 1; i < sets.size() && chain; ++i) {
      chain = (sets[i - 1] & ~sets[i]) == 0;
    }
    if (chain) return true;
  }
  return false;
}

}  // namespace evord
