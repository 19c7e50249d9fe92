#include "evord/signs.hpp"

#include "evord/error.hpp"

namespace evord {

namespace {

void require_five(const PermSet& q) {
  if (q.size() != 5) {
    throw Unsupported("sign test needs exactly 5 observers, got " + std::to_string(q.size()));
  }
  if (!q.contains_identity()) throw Error("sign test needs a set containing the identity");
}

}  // namespace

SignClass pair_sign_class(const PermSet& q, PairIndex pair) {
  if (!q.contains_identity()) throw Error("pair_sign_class: set must contain the identity");
  SignClass c;
  c.m = static_cast<int>(q.size()) - 1;
  for (int i = 0; i < c.m; ++i) {
    if (reverses(q.members()[static_cast<std::size_t>(i + 1)], pair.j, pair.k)) {
      c.mask |= std::uint32_t{1} << i;
    }
  }
  return c;
}

SignReport sign_report(const PermSet& q) {
  require_five(q);
  SignReport r;
  r.m = 4;
  std::vector<bool> hit(std::size_t{1} << r.m, false);
  for (const auto& pair : all_pairs(q.n())) {
    const auto c = pair_sign_class(q, pair);
    r.table.emplace_back(pair, c);
    hit[c.mask] = true;
  }
  for (std::uint32_t mask = 1; mask < hit.size(); ++mask) {
    if (!hit[mask]) r.never_eliminated.push_back(mask);
  }
  r.unrealizable = r.never_eliminated.empty();
  return r;
}

bool sign_unrealizable(const PermSet& q) { return sign_report(q).unrealizable; }

std::uint32_t pair_reversal_bits(const Permutation& p) {
  if (p.size() > 8) throw Unsupported("pair_reversal_bits: n > 8");
  std::uint32_t bits = 0;
  int idx = 0;
  for (int j = 1; j <= p.size(); ++j) {
    for (int k = j + 1; k <= p.size(); ++k, ++idx) {
      if (reverses(p, j, k)) bits |= std::uint32_t{1} << idx;
    }
  }
  return bits;
}

bool covers_all_sign_patterns(std::span<const std::uint32_t> member_bits, int pair_count) {
  const auto m = member_bits.size();
  const std::uint32_t all = pair_count >= 32 ? ~std::uint32_t{0}
                                             : (std::uint32_t{1} << pair_count) - 1;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
    // Pairs whose reversal pattern equals `mask`.
    std::uint32_t pairs = all;
    for (std::size_t i = 0; i < m; ++i) {
      pairs &= (mask >> i) & 1U ? member_bits[i] : ~member_bits[i];
    }
    if (!pairs) return false;
  }
  return true;
}

}  // namespace evord
