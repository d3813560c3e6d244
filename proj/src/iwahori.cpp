#include "hecke/iwahori.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace hecke {

// ---------------------------------------------------------------------------
// AffineWeylGroup

AffineWeylGroup::AffineWeylGroup(BasedRootDatum datum) : datum_(std::move(datum)) {
  const WeylGroup& W = datum_.weyl_group();
  const auto& roots = datum_.positive_roots();
  std::set<IntVector> positive;
  for (const Root& a : roots) positive.insert(a.root);

  negative_.assign(W.order(), std::vector<char>(roots.size(), 0));
  for (std::size_t w = 0; w < W.order(); ++w)
    for (std::size_t a = 0; a < roots.size(); ++a) {
      // (w^-1 alpha)(x) = alpha(w x)
      IntVector pulled = W.element(w).matrix.pullback(roots[a].root);
      negative_[w][a] = positive.count(pulled) ? 0 : 1;
    }

  for (std::size_t i = 0; i < finite_rank(); ++i) simple_.push_back(finite(W.generator(i)));
  // affine simple reflections: reflections t_{k alpha^vee} s_alpha of length one
  const auto n = static_cast<std::size_t>(datum_.rank());
  for (const Root& a : roots) {
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) -= a.coroot[r] * a.root[c];
    std::size_t s_alpha = W.index_of(m);
    for (int k : {1, -1, 2, -2}) {
      ExtAffineWeylElement x{k * Coweight(a.coroot), s_alpha};
      if (length(x) == 1 && std::find(simple_.begin(), simple_.end(), x) == simple_.end()) simple_.push_back(x);
    }
  }
}

ExtAffineWeylElement AffineWeylGroup::identity() const {
  return {Coweight::zero(static_cast<std::size_t>(datum_.rank())), 0};
}

ExtAffineWeylElement AffineWeylGroup::translation(const Coweight& lambda) const {
  datum_.check_coweight(lambda);
  return {lambda, 0};
}

ExtAffineWeylElement AffineWeylGroup::finite(std::size_t w) const {
  return {Coweight::zero(static_cast<std::size_t>(datum_.rank())), w};
}

ExtAffineWeylElement AffineWeylGroup::multiply(const ExtAffineWeylElement& x, const ExtAffineWeylElement& y) const {
  const WeylGroup& W = finite_group();
  return {x.translation + W.apply(x.finite, y.translation), W.multiply(x.finite, y.finite)};
}

ExtAffineWeylElement AffineWeylGroup::inverse(const ExtAffineWeylElement& x) const {
  // (a, u)^-1 = (-u^-1 a, u^-1)
  const WeylGroup& W = finite_group();
  std::size_t u_inv = W.inverse(x.finite);
  return {-W.apply(u_inv, x.translation), u_inv};
}

int AffineWeylGroup::length(const ExtAffineWeylElement& x) const {
  const auto& roots = datum_.positive_roots();
  const auto& neg = negative_[x.finite];
  int len = 0;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    int p = pairing(roots[a].root, x.translation);
    len += neg[a] ? std::abs(p - 1) : std::abs(p);
  }
  return len;
}

AffineWeylGroup::Decomposition AffineWeylGroup::reduced_decomposition(const ExtAffineWeylElement& x) const {
  Decomposition d;
  ExtAffineWeylElement cur = x;
  int len = length(cur);
  while (len > 0) {
    bool found = false;
    for (std::size_t s = 0; s < simple_.size(); ++s) {
      ExtAffineWeylElement next = multiply(simple_[s], cur);
      int l = length(next);
      if (l < len) {
        d.word.push_back(s);
        cur = std::move(next);
        len = l;
        found = true;
        break;
      }
    }
    if (!found) throw ConsistencyError("no simple reflection shortens an element of positive length");
  }
  d.tail = std::move(cur);
  return d;
}

// ---------------------------------------------------------------------------
// AffineHeckeElement

AffineHeckeElement AffineHeckeElement::basis(const ExtAffineWeylElement& x, const Laurent& c) {
  AffineHeckeElement h;
  h.add_term(x, c);
  return h;
}

Laurent AffineHeckeElement::coeff(const ExtAffineWeylElement& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? Laurent() : it->second;
}

void AffineHeckeElement::add_term(const ExtAffineWeylElement& x, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AffineHeckeElement& AffineHeckeElement::operator+=(const AffineHeckeElement& o) {
  for (const auto& [x, c] : o.terms_) add_term(x, c);
  return *this;
}

AffineHeckeElement& AffineHeckeElement::operator-=(const AffineHeckeElement& o) {
  for (const auto& [x, c] : o.terms_) add_term(x, -c);
  return *this;
}

AffineHeckeElement operator*(const Laurent& c, const AffineHeckeElement& a) {
  AffineHeckeElement r;
  if (c.is_zero()) return r;
  for (const auto& [x, y] : a.terms_) r.add_term(x, c * y);
  return r;
}

// ---------------------------------------------------------------------------
// AffineHeckeAlgebra

namespace {
const Laurent q_minus_one = Laurent::v_power(2) - Laurent(1);
const Laurent q = Laurent::v_power(2);
}  // namespace

AffineHeckeAlgebra::AffineHeckeAlgebra(BasedRootDatum datum, std::size_t max_support)
    : group_(std::move(datum)), max_support_(max_support) {
  const BasedRootDatum& D = group_.datum();
  const auto n = static_cast<std::size_t>(D.rank());
  const int bound = n <= 3 ? 3 : (n <= 5 ? 2 : 1);
  // For each simple root pick the cheapest dominant coweight in a small box
  // that pairs positively with it; 2rho^vee always qualifies.
  for (std::size_t i = 0; i < static_cast<std::size_t>(D.semisimple_rank()); ++i) {
    Coweight best = D.two_rho_coroot();
    auto cost = [&](const Coweight& x) {
      int abs_sum = 0;
      for (int c : x) abs_sum += std::abs(c);
      return std::make_tuple(D.rho_pairing_exponent(x), abs_sum);
    };
    auto best_cost = cost(best);
    IntVector c(n, -bound);
    while (true) {
      Coweight x(c);
      if (D.is_dominant(x) && pairing(D.simple_roots()[i], x) > 0) {
        auto cx = cost(x);
        if (cx < best_cost || (cx == best_cost && best < x)) {
          best = x;
          best_cost = cx;
        }
      }
      std::size_t k = 0;
      while (k < n && c[k] == bound) c[k++] = -bound;
      if (k == n) break;
      ++c[k];
    }
    dominant_steps_.push_back(best);
  }
}

void AffineHeckeAlgebra::guard(const AffineHeckeElement& h) const {
  if (h.support_size() > max_support_)
    throw ResourceLimit("affine Hecke computation exceeded " + std::to_string(max_support_) + " basis elements");
}

AffineHeckeElement AffineHeckeAlgebra::one() const { return basis(group_.identity()); }

AffineHeckeElement AffineHeckeAlgebra::finite_generator(std::size_t i) const {
  if (i >= group_.finite_rank()) throw ValidationError("finite simple reflection index out of range");
  return basis(group_.simple_reflections()[i]);
}

AffineHeckeElement AffineHeckeAlgebra::simple_generator(std::size_t i) const {
  if (i >= group_.simple_reflections().size()) throw ValidationError("simple reflection index out of range");
  return basis(group_.simple_reflections()[i]);
}

AffineHeckeElement AffineHeckeAlgebra::left_simple(std::size_t s, const AffineHeckeElement& h) const {
  const ExtAffineWeylElement& sx = group_.simple_reflections()[s];
  AffineHeckeElement r;
  for (const auto& [z, c] : h.terms()) {
    ExtAffineWeylElement sz = group_.multiply(sx, z);
    if (group_.length(sz) > group_.length(z)) {
      r.add_term(sz, c);
    } else {
      r.add_term(z, q_minus_one * c);
      r.add_term(sz, q * c);
    }
  }
  guard(r);
  return r;
}

AffineHeckeElement AffineHeckeAlgebra::right_simple(const AffineHeckeElement& h, std::size_t s) const {
  const ExtAffineWeylElement& sx = group_.simple_reflections()[s];
  AffineHeckeElement r;
  for (const auto& [z, c] : h.terms()) {
    ExtAffineWeylElement zs = group_.multiply(z, sx);
    if (group_.length(zs) > group_.length(z)) {
      r.add_term(zs, c);
    } else {
      r.add_term(z, q_minus_one * c);
      r.add_term(zs, q * c);
    }
  }
  guard(r);
  return r;
}

AffineHeckeElement AffineHeckeAlgebra::left_basis(const ExtAffineWeylElement& x, const AffineHeckeElement& h) const {
  auto dec = group_.reduced_decomposition(x);
  // T_x = T_{s_1} ... T_{s_k} T_tail, and T_tail T_z = T_{tail z}
  AffineHeckeElement r;
  for (const auto& [z, c] : h.terms()) r.add_term(group_.multiply(dec.tail, z), c);
  for (auto it = dec.word.rbegin(); it != dec.word.rend(); ++it) r = left_simple(*it, r);
  return r;
}

AffineHeckeElement AffineHeckeAlgebra::multiply(const AffineHeckeElement& a, const AffineHeckeElement& b) const {
  AffineHeckeElement r;
  for (const auto& [x, c] : a.terms()) {
    r += c * left_basis(x, b);
    guard(r);
  }
  return r;
}

AffineHeckeElement AffineHeckeAlgebra::basis_inverse(const ExtAffineWeylElement& x) const {
  auto dec = group_.reduced_decomposition(x);
  // T_x^-1 = T_tail^-1 T_{s_k}^-1 ... T_{s_1}^-1
  AffineHeckeElement r = basis(group_.inverse(dec.tail));
  const Laurent q_inv = Laurent::v_power(-2);
  const Laurent one_minus_q_inv = Laurent(1) - q_inv;
  for (auto it = dec.word.rbegin(); it != dec.word.rend(); ++it) {
    AffineHeckeElement next = q_inv * right_simple(r, *it);
    next -= one_minus_q_inv * r;
    r = std::move(next);
    guard(r);
  }
  return r;
}

std::pair<Coweight, Coweight> AffineHeckeAlgebra::dominant_split(const Coweight& lambda) const {
  const BasedRootDatum& D = datum();
  D.check_coweight(lambda);
  Coweight b = Coweight::zero(lambda.size());
  for (std::size_t i = 0; i < dominant_steps_.size(); ++i) {
    int deficit = -pairing(D.simple_roots()[i], lambda);
    if (deficit <= 0) continue;
    int step = pairing(D.simple_roots()[i], dominant_steps_[i]);
    int times = (deficit + step - 1) / step;
    b += times * dominant_steps_[i];
  }
  Coweight a = lambda + b;
  if (!D.is_dominant(a) || !D.is_dominant(b)) throw ConsistencyError("dominant split failed for " + lambda.str());
  return {a, b};
}

AffineHeckeElement AffineHeckeAlgebra::theta(const Coweight& lambda) const {
  auto [a, b] = dominant_split(lambda);
  return theta(a, b);
}

AffineHeckeElement AffineHeckeAlgebra::theta(const Coweight& a, const Coweight& b) const {
  const BasedRootDatum& D = datum();
  if (!D.is_dominant(a) || !D.is_dominant(b))
    throw ValidationError("theta decomposition needs dominant coweights, got " + a.str() + " and " + b.str());
  ExtAffineWeylElement ta = group_.translation(a), tb = group_.translation(b);
  int shift = -group_.length(ta) + group_.length(tb);
  AffineHeckeElement inv_b = basis_inverse(tb);
  return Laurent::v_power(shift) * left_basis(ta, inv_b);
}

AffineHeckeElement AffineHeckeAlgebra::central_element(const SymmetricFunction& f) const {
  if (!is_weyl_invariant(datum(), f.multiset())) throw ValidationError("central element needs a W-invariant function");
  AffineHeckeElement z;
  for (const auto& [lambda, c] : f.terms()) {
    z += c * theta(lambda);
    guard(z);
  }
  return z;
}

Laurent AffineHeckeAlgebra::poincare_polynomial() const {
  Laurent p;
  const WeylGroup& W = group_.finite_group();
  for (std::size_t w = 0; w < W.order(); ++w) p += Laurent::v_power(2 * static_cast<int>(W.length(w)));
  return p;
}

FracScaled<AffineHeckeElement> AffineHeckeAlgebra::spherical_idempotent() const {
  AffineHeckeElement sum;
  const WeylGroup& W = group_.finite_group();
  for (std::size_t w = 0; w < W.order(); ++w) sum.add_term(group_.finite(w), Laurent(1));
  return {std::move(sum), poincare_polynomial()};
}

FracScaled<AffineHeckeElement> AffineHeckeAlgebra::multiply(const FracScaled<AffineHeckeElement>& a,
                                                            const FracScaled<AffineHeckeElement>& b) const {
  return {multiply(a.numerator, b.numerator), a.denominator * b.denominator};
}

bool AffineHeckeAlgebra::equal(const FracScaled<AffineHeckeElement>& a, const FracScaled<AffineHeckeElement>& b) {
  return b.denominator * a.numerator == a.denominator * b.numerator;
}

SphericalCosetVector AffineHeckeAlgebra::satake_inverse(const SymmetricFunction& f) const {
  const BasedRootDatum& D = datum();
  const WeylGroup& W = group_.finite_group();
  AffineHeckeElement z = central_element(f);
  // e_K = (sum T_w) / P_W; the K-normalized coordinates are those of z * sum T_w
  AffineHeckeElement n = multiply(z, spherical_idempotent().numerator);

  std::map<Coweight, Laurent> coset_coeff;
  std::map<Coweight, std::size_t> coset_count;
  for (const auto& [x, c] : n.terms()) {
    Coweight lambda = D.dominant_representative(x.translation);
    auto [it, inserted] = coset_coeff.try_emplace(lambda, c);
    if (!inserted && it->second != c)
      throw ConsistencyError("z * e_K is not bi-K-invariant: coefficients differ on the double coset of " +
                             lambda.str());
    ++coset_count[lambda];
  }
  SphericalCosetVector out;
  for (const auto& [lambda, c] : coset_coeff) {
    std::size_t expected = D.weyl_orbit(lambda).size() * W.order();
    if (coset_count[lambda] != expected)
      throw ConsistencyError("z * e_K does not fill the double coset of " + lambda.str());
    out.coords.emplace(lambda, c);
  }
  return out;
}

SatakeMatrix AffineHeckeAlgebra::satake_matrix(const std::vector<Coweight>& list) const {
  const BasedRootDatum& D = datum();
  std::set<Coweight> members(list.begin(), list.end());
  for (const Coweight& lambda : list) {
    if (!D.is_dominant(lambda)) throw ValidationError("satake_matrix needs dominant coweights, got " + lambda.str());
    for (const Coweight& mu : dominant_weights_below(D, lambda))
      if (!members.count(mu))
        throw ValidationError("coweight list is not closed downward: " + mu.str() + " <= " + lambda.str() +
                              " is missing");
  }
  SatakeMatrix m;
  m.basis.assign(members.begin(), members.end());
  std::stable_sort(m.basis.begin(), m.basis.end(), [&](const Coweight& a, const Coweight& b) {
    return D.rho_pairing_exponent(a) < D.rho_pairing_exponent(b);
  });
  const std::size_t N = m.basis.size();
  std::map<Coweight, std::size_t> index;
  for (std::size_t i = 0; i < N; ++i) index.emplace(m.basis[i], i);

  m.inverse_map.assign(N, std::vector<Laurent>(N));
  for (std::size_t j = 0; j < N; ++j) {
    SphericalCosetVector col = satake_inverse(orbit_character(D, m.basis[j]));
    for (const auto& [lambda, c] : col.coords) {
      auto it = index.find(lambda);
      if (it == index.end())
        throw ConsistencyError("inverse Satake image of m" + m.basis[j].str() + " leaves the coweight list");
      m.inverse_map[it->second][j] = c;
    }
  }
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!m.inverse_map[i][j].is_zero()) throw ConsistencyError("inverse Satake matrix is not triangular");

  // back substitution against the unit diagonal
  m.transform.assign(N, std::vector<Laurent>(N));
  for (std::size_t j = 0; j < N; ++j) {
    // column j of the inverse: solve A x = e_j
    for (std::size_t ii = N; ii-- > 0;) {
      Laurent acc = (ii == j) ? Laurent(1) : Laurent();
      for (std::size_t k = ii + 1; k < N; ++k) acc -= m.inverse_map[ii][k] * m.transform[k][j];
      m.transform[ii][j] = acc * m.inverse_map[ii][ii].unit_inverse();
    }
  }
  return m;
}

SymmetricFunction AffineHeckeAlgebra::satake_transform(const SphericalCosetVector& x) const {
  const BasedRootDatum& D = datum();
  std::set<Coweight> closure;
  for (const auto& [lambda, c] : x.coords) {
    if (!D.is_dominant(lambda)) throw ValidationError("double cosets are indexed by dominant coweights");
    for (const Coweight& mu : dominant_weights_below(D, lambda)) closure.insert(mu);
  }
  if (closure.empty()) return SymmetricFunction::constant(static_cast<std::size_t>(D.rank()), Laurent());
  SatakeMatrix m = satake_matrix({closure.begin(), closure.end()});
  std::map<Coweight, std::size_t> index;
  for (std::size_t i = 0; i < m.basis.size(); ++i) index.emplace(m.basis[i], i);

  SymmetricFunction out;
  for (const auto& [lambda, c] : x.coords) {
    std::size_t j = index.at(lambda);
    for (std::size_t i = 0; i < m.basis.size(); ++i)
      if (!m.transform[i][j].is_zero()) out += (c * m.transform[i][j]) * orbit_character(D, m.basis[i]);
  }
  return out;
}

}  // namespace hecke
