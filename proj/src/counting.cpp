#include "evord/counting.hpp"

#include "evord/error.hpp"

namespace evord {

mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class binomial(const mpz_class& n, unsigned long k) {
  if (n < 0) return 0;
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

mpz_class centralizer_order(int n) {
  if (n < 1) throw Error("centralizer_order: n must be positive");
  const int half = n / 2;
  mpz_class pow2 = 1;
  pow2 <<= static_cast<mp_bitcnt_t>(half);
  return factorial(half) * pow2;
}

mpz_class invariant_set_count(const InvariantCountInput& in) {
  if (in.n < 1 || in.k < 1) throw Error("invariant_set_count: n, k must be positive");
  const mpz_class c = centralizer_order(in.n);
  const mpz_class c_pairs = (factorial(in.n) - c) / 2;
  const int j_max = (in.k - 1) / 2;
  mpz_class total = 0;
  for (int j = 0; j <= j_max; ++j) {
    total += binomial(c_pairs, static_cast<unsigned long>(j)) *
             binomial(c - 1, static_cast<unsigned long>(in.k - 2 * j - 1));
  }
  return total;
}

Order5Counts order5_subgroup_count(int n) {
  if (n != 5 && n != 6) {
    throw Unsupported("order5_subgroup_count: only n in {5, 6}");
  }
  // Choose the 5 moved points, then (5-1)! cyclic arrangements.
  Order5Counts out;
  out.five_cycles = binomial(n, 5) * factorial(4);
  out.subgroups = out.five_cycles / 4;
  return out;
}

mpz_class equivalence_class_count(int n, int k) {
  if (k != 5 || (n != 5 && n != 6)) {
    throw Unsupported("equivalence_class_count: only k = 5, n in {5, 6}");
  }
  const mpz_class g = order5_subgroup_count(n).subgroups;
  const mpz_class sets = binomial(factorial(n) - 1, 4);
  return (sets - g) / 5 + g;
}

std::vector<std::pair<long, long>> diophantine_solutions(long n_max, long m_max) {
  std::vector<std::pair<long, long>> out;
  for (long n = 2; n <= n_max; ++n) {
    const mpz_class pairs = binomial(n, 2);
    for (long m = 1; m <= m_max; ++m) {
      mpz_class rhs = 1;
      rhs <<= static_cast<mp_bitcnt_t>(m - 1);
      rhs -= 1;
      if (rhs == pairs) out.emplace_back(n, m);
      if (rhs > pairs) break;
    }
  }
  return out;
}

}  // namespace evord
