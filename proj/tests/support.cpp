#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace testing_support {

namespace {

IntMatrix reflection_matrix(const IntVector& root, const IntVector& coroot) {
  const std::size_t n = root.size();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) -= coroot[r] * root[c];
  return m;
}

// Coordinates x with sum_i x_i C[i][j] = rhs[j], C the Cartan matrix.
std::vector<mpq_class> solve_cartan(const BasedRootDatum& datum, const std::vector<int>& rhs, bool transpose) {
  const std::size_t r = datum.simple_roots().size();
  std::vector<std::vector<mpq_class>> a(r, std::vector<mpq_class>(r + 1));
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < r; ++i) a[j][i] = transpose ? datum.cartan(j, i) : datum.cartan(i, j);
    a[j][r] = rhs[j];
  }
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    for (std::size_t k = 0; k < r; ++k) {
      if (k == c || a[k][c] == 0) continue;
      mpq_class f = a[k][c] / a[c][c];
      for (std::size_t m = c; m <= r; ++m) a[k][m] -= f * a[c][m];
    }
  }
  std::vector<mpq_class> x(r);
  for (std::size_t i = 0; i < r; ++i) x[i] = a[i][r] / a[i][i];
  return x;
}

bool nonnegative(const std::vector<mpq_class>& x) {
  return std::all_of(x.begin(), x.end(), [](const mpq_class& c) { return c >= 0; });
}

// Positive roots and coroots: W-images of the simple ones whose simple
// coordinates (found from the Cartan matrix) are non-negative.
std::vector<IntVector> positive_roots_by_closure(const BasedRootDatum& datum) {
  std::set<IntVector> roots;
  for (const IntVector& a : datum.simple_roots())
    for (const IntMatrix& w : weyl_closure(datum)) roots.insert(w.pullback(a));
  std::vector<IntVector> out;
  for (const IntVector& a : roots) {
    std::vector<int> p;
    for (const IntVector& cv : datum.simple_coroots()) p.push_back(pairing(a, Coweight(cv)));
    if (nonnegative(solve_cartan(datum, p, false))) out.push_back(a);
  }
  return out;
}

Coweight two_rho_by_closure(const BasedRootDatum& datum) {
  std::set<IntVector> coroots;
  for (const IntVector& b : datum.simple_coroots())
    for (const IntMatrix& w : weyl_closure(datum)) coroots.insert(w.apply(Coweight(b)).values());
  Coweight sum = Coweight::zero(static_cast<std::size_t>(datum.rank()));
  for (const IntVector& b : coroots) {
    std::vector<int> p;
    for (const IntVector& a : datum.simple_roots()) p.push_back(pairing(a, Coweight(b)));
    if (nonnegative(solve_cartan(datum, p, true))) sum += Coweight(b);
  }
  return sum;
}

}  // namespace

std::vector<IntMatrix> weyl_closure(const BasedRootDatum& datum) {
  const std::size_t n = static_cast<std::size_t>(datum.rank());
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < datum.simple_roots().size(); ++i)
    gens.push_back(reflection_matrix(datum.simple_roots()[i], datum.simple_coroots()[i]));
  std::set<IntMatrix> seen{IntMatrix::identity(n)};
  std::vector<IntMatrix> frontier{IntMatrix::identity(n)};
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const IntMatrix& w : frontier)
      for (const IntMatrix& s : gens) {
        IntMatrix x = s * w;
        if (seen.insert(x).second) next.push_back(x);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

mpz_class weyl_dimension(const BasedRootDatum& datum, const Coweight& lambda) {
  const auto roots = positive_roots_by_closure(datum);
  const Coweight two_rho = two_rho_by_closure(datum);
  mpq_class dim = 1;
  for (const IntVector& a : roots) {
    int num = pairing(a, 2 * lambda + two_rho);
    int den = pairing(a, two_rho);
    dim *= mpq_class(num, den);
  }
  dim.canonicalize();
  if (dim.get_den() != 1) return -1;
  return dim.get_num();
}

namespace {

WeightMultiset alternating_sum(const std::vector<IntMatrix>& group, const std::vector<int>& signs,
                               const Coweight& mu) {
  WeightMultiset a;
  for (std::size_t k = 0; k < group.size(); ++k) a.add_term(group[k].apply(mu), Laurent(signs[k]));
  return a;
}

int matrix_sign(const IntMatrix& m) {
  // det of a reflection group element is +-1; compute it exactly by elimination over Q
  const std::size_t n = m.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det > 0 ? 1 : -1;
}

}  // namespace

bool alternating_sum_identity(const BasedRootDatum& datum, const Coweight& lambda, const SymmetricFunction& chi) {
  const auto group = weyl_closure(datum);
  std::vector<int> signs;
  for (const IntMatrix& w : group) signs.push_back(matrix_sign(w));
  const Coweight two_rho = two_rho_by_closure(datum);
  WeightMultiset doubled;
  for (const auto& [mu, c] : chi.terms()) doubled.add_term(2 * mu, c);
  return doubled * alternating_sum(group, signs, two_rho) == alternating_sum(group, signs, 2 * lambda + two_rho);
}

Scalar leibniz_det(const ScalarMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = m.domain().zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Scalar term = m.domain().one();
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::uint64_t slow_pow_mod(std::uint64_t a, long e, std::uint64_t p) {
  a %= p;
  if (e < 0) {
    // inverse by search
    std::uint64_t inv = 0;
    for (std::uint64_t x = 1; x < p; ++x)
      if (a * x % p == 1) inv = x;
    a = inv;
    e = -e;
  }
  std::uint64_t r = 1 % p;
  for (long i = 0; i < e; ++i) r = r * a % p;
  return r;
}

}  // namespace testing_support
