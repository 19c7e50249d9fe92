#include "evord/certificate.hpp"

#include <sstream>

namespace evord {

namespace {

Polynomial h(int i, int j) { return Polynomial::variable(i, j); }

Polynomial gap_sum(int j) {
  Polynomial s;
  for (int l = 1; l <= 4; ++l) s += h(l, j);
  return s;
}

std::vector<Permutation> restrict_to(const PermSet& q, const std::vector<int>& keep) {
  // keep is sorted; event keep[r] becomes label r+1.
  std::vector<int> relabel(static_cast<std::size_t>(q.n() + 1), 0);
  for (std::size_t r = 0; r < keep.size(); ++r) relabel[static_cast<std::size_t>(keep[r])] = static_cast<int>(r + 1);
  std::vector<Permutation> out;
  for (const auto& p : q.members()) {
    std::vector<int> image;
    for (int i = 1; i <= p.size(); ++i) {
      if (const int l = relabel[static_cast<std::size_t>(p(i))]) image.push_back(l);
    }
    out.emplace_back(image);
  }
  return out;
}

}  // namespace

PermSet cyclic_q0() {
  return PermSet{{1, 2, 3, 4, 5}, {2, 3, 4, 5, 1}, {3, 4, 5, 1, 2}, {4, 5, 1, 2, 3}, {5, 1, 2, 3, 4}};
}

BasicSchedule<Polynomial> symbolic_schedule(int n) {
  BasicSchedule<Polynomial> s;
  for (int j = 0; j < 4; ++j) {
    Polynomial f;
    for (int i = 1; i <= n; ++i) {
      s.F[static_cast<std::size_t>(j)].push_back(f);
      f += h(i, j);
    }
  }
  return s;
}

SymbolicGapSystem build_symbolic_gap_matrix() {
  SymbolicGapSystem sys;
  for (int i = 1; i <= 4; ++i) {
    std::array<Polynomial, 3> row;
    for (int j = 1; j <= 3; ++j) {
      const int k = ((i - j - 1) % 5 + 5) % 5 + 1;
      Polynomial a;
      if (k == 1) {
        a = -gap_sum(j) - h(i - 1, 0);
      } else if (i == 1) {
        a = h(k - 1, j) + gap_sum(0);
      } else {
        a = h(k - 1, j) - h(i - 1, 0);
      }
      row[static_cast<std::size_t>(j - 1)] = std::move(a);
    }
    sys.A.push_back(std::move(row));
    sys.b.push_back(i == 1 ? -gap_sum(0) : h(i - 1, 0));
  }
  return sys;
}

SymbolicGapSystem generic_symbolic_gap_matrix() {
  const auto q0 = cyclic_q0();
  const auto& m = q0.members();
  return assemble_gap_system(m[4], {m[1], m[2], m[3]}, symbolic_schedule(5));
}

std::string PolySummary::verdict() const {
  if (sign > 0) return "all-positive";
  if (sign < 0) return "all-negative";
  return "mixed";
}

PolySummary summarize(const Polynomial& p) {
  PolySummary s;
  s.terms = p.term_count();
  s.sign = p.uniform_sign();
  s.unit = s.sign != 0 && p.all_coefficients_equal(s.sign);
  return s;
}

CertificateReport certify_q0() {
  CertificateReport r;
  const auto sys = build_symbolic_gap_matrix();
  const auto generic = generic_symbolic_gap_matrix();
  r.matrices_agree = sys.A == generic.A && sys.b == generic.b;

  const auto g = gap_determinants(sys);
  r.D = g.D;
  r.beta_d4 = g.beta_d4;
  for (std::size_t k = 0; k < 4; ++k) r.D_summary[k] = summarize(r.D[k]);
  r.beta_summary = summarize(r.beta_d4);

  r.linear_relation = true;
  for (std::size_t c = 0; c < 3; ++c) {
    const Polynomial col = r.D[0] * sys.A[0][c] - r.D[1] * sys.A[1][c] + r.D[2] * sys.A[2][c] -
                           r.D[3] * sys.A[3][c];
    if (!col.is_zero()) r.linear_relation = false;
  }

  const std::array<int, 4> expected{-1, 1, -1, 1};
  bool uniform = r.beta_summary.sign < 0 && r.beta_summary.unit && r.beta_summary.terms == 125;
  for (std::size_t k = 0; k < 4; ++k) {
    uniform = uniform && r.D_summary[k].sign == expected[k] && r.D_summary[k].unit &&
              r.D_summary[k].terms == 125;
  }
  r.conclusion = uniform && r.matrices_agree && r.linear_relation;
  return r;
}

std::string CertificateReport::str() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < 4; ++k) {
    out << "D" << k + 1 << ": " << D_summary[k].terms << " terms, " << D_summary[k].verdict()
        << (D_summary[k].unit ? ", unit coefficients" : "") << "\n";
  }
  out << "beta*D4: " << beta_summary.terms << " terms, " << beta_summary.verdict()
      << (beta_summary.unit ? ", unit coefficients" : "") << "\n";
  out << "closed form matches generic construction: " << (matrices_agree ? "yes" : "no") << "\n";
  out << "D1 a1 - D2 a2 + D3 a3 - D4 a4 = 0: " << (linear_relation ? "yes" : "no") << "\n";
  out << "alpha1, alpha2, alpha3, beta < 0 for all positive gaps: "
      << (conclusion ? "certified" : "NOT certified") << "\n";
  return out.str();
}

std::string CertificateReport::dump() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < 4; ++k) out << "# D" << k + 1 << "\n" << D[k].dump();
  out << "# beta*D4\n" << beta_d4.dump();
  return out.str();
}

bool contains_q0_minor(const PermSet& q) {
  if (q.size() != 5 || q.n() < 5 || q.n() > 12) return false;
  const auto target = canonicalize(cyclic_q0());
  const int n = q.n();
  std::vector<int> keep{1, 2, 3, 4, 5};
  while (true) {
    auto restricted = restrict_to(q, keep);
    std::sort(restricted.begin(), restricted.end());
    if (std::adjacent_find(restricted.begin(), restricted.end()) == restricted.end() &&
        canonicalize(PermSet(restricted)) == target) {
      return true;
    }
    // Next 5-subset of {1..n} in lexicographic order.
    int pos = 4;
    while (pos >= 0 && keep[static_cast<std::size_t>(pos)] == n - 4 + pos) --pos;
    if (pos < 0) return false;
    ++keep[static_cast<std::size_t>(pos)];
    for (int r = pos + 1; r < 5; ++r) keep[static_cast<std::size_t>(r)] = keep[static_cast<std::size_t>(r - 1)] + 1;
  }
}

}  // namespace evord
