#include "hecke/characters.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hecke {

// ---------------------------------------------------------------------------
// WeightMultiset

WeightMultiset::WeightMultiset(Terms terms) {
  for (auto& [lambda, c] : terms)
    if (!c.is_zero()) terms_.emplace(lambda, std::move(c));
}

WeightMultiset WeightMultiset::constant(std::size_t rank, const Laurent& c) {
  return monomial(Coweight::zero(rank), c);
}

WeightMultiset WeightMultiset::monomial(const Coweight& lambda, const Laurent& c) {
  WeightMultiset f;
  f.add_term(lambda, c);
  return f;
}

Laurent WeightMultiset::coeff(const Coweight& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Laurent() : it->second;
}

void WeightMultiset::add_term(const Coweight& lambda, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeightMultiset& WeightMultiset::operator+=(const WeightMultiset& o) {
  for (const auto& [lambda, c] : o.terms_) add_term(lambda, c);
  return *this;
}

WeightMultiset& WeightMultiset::operator-=(const WeightMultiset& o) {
  for (const auto& [lambda, c] : o.terms_) add_term(lambda, -c);
  return *this;
}

WeightMultiset operator*(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset r;
  for (const auto& [la, ca] : a.terms_)
    for (const auto& [lb, cb] : b.terms_) r.add_term(la + lb, ca * cb);
  return r;
}

WeightMultiset operator*(const Laurent& c, const WeightMultiset& a) {
  WeightMultiset r;
  if (c.is_zero()) return r;
  for (const auto& [lambda, x] : a.terms_) r.add_term(lambda, c * x);
  return r;
}

WeightMultiset WeightMultiset::transformed(const IntMatrix& m) const {
  WeightMultiset r;
  for (const auto& [lambda, c] : terms_) r.add_term(m.apply(lambda), c);
  return r;
}

// ---------------------------------------------------------------------------
// SymmetricFunction

bool is_weyl_invariant(const BasedRootDatum& datum, const WeightMultiset& f) {
  for (const auto& [lambda, c] : f.terms()) datum.check_coweight(lambda);
  const WeylGroup& W = datum.weyl_group();
  for (std::size_t i = 0; i < static_cast<std::size_t>(datum.semisimple_rank()); ++i)
    if (f.transformed(W.element(W.generator(i)).matrix) != f) return false;
  return true;
}

SymmetricFunction::SymmetricFunction(const BasedRootDatum& datum, WeightMultiset f) : f_(std::move(f)) {
  if (!is_weyl_invariant(datum, f_)) throw ValidationError("weight multiset is not W-invariant");
}

SymmetricFunction SymmetricFunction::constant(std::size_t rank, const Laurent& c) {
  return SymmetricFunction(Trusted{}, WeightMultiset::constant(rank, c));
}

SymmetricFunction& SymmetricFunction::operator+=(const SymmetricFunction& o) {
  f_ += o.f_;
  return *this;
}

SymmetricFunction& SymmetricFunction::operator-=(const SymmetricFunction& o) {
  f_ -= o.f_;
  return *this;
}

SymmetricFunction operator*(const SymmetricFunction& a, const SymmetricFunction& b) {
  return SymmetricFunction(SymmetricFunction::Trusted{}, a.f_ * b.f_);
}

SymmetricFunction operator*(const Laurent& c, const SymmetricFunction& a) {
  return SymmetricFunction(SymmetricFunction::Trusted{}, c * a.f_);
}

// ---------------------------------------------------------------------------
// characters

SymmetricFunction orbit_character(const BasedRootDatum& datum, const Coweight& lambda) {
  if (!datum.is_dominant(lambda)) throw ValidationError("orbit character needs a dominant weight, got " + lambda.str());
  WeightMultiset f;
  for (const Coweight& mu : datum.weyl_orbit(lambda)) f.add_term(mu, Laurent(1));
  return SymmetricFunction(datum, std::move(f));
}

namespace {

bool is_weight_of(const BasedRootDatum& datum, const Coweight& nu, const Coweight& lambda) {
  return datum.dominance_leq(datum.dominant_representative(nu), lambda);
}

// W-invariant positive definite form: sum over W of the standard dot product.
std::vector<std::vector<long>> invariant_form(const BasedRootDatum& datum) {
  const auto n = static_cast<std::size_t>(datum.rank());
  std::vector<std::vector<long>> B(n, std::vector<long>(n, 0));
  for (const WeylElement& w : datum.weyl_group().elements())
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) B[i][j] += static_cast<long>(w.matrix(k, i)) * w.matrix(k, j);
  return B;
}

long form(const std::vector<std::vector<long>>& B, const Coweight& x, const Coweight& y) {
  long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * B[i][j] * y[j];
  return s;
}

}  // namespace

std::vector<Coweight> weights_of_irreducible(const BasedRootDatum& datum, const Coweight& lambda) {
  if (!datum.is_dominant(lambda)) throw ValidationError("highest weight must be dominant, got " + lambda.str());
  std::set<Coweight> seen{lambda};
  std::deque<Coweight> queue{lambda};
  while (!queue.empty()) {
    Coweight x = queue.front();
    queue.pop_front();
    for (const IntVector& b : datum.simple_coroots()) {
      Coweight y = x - Coweight(b);
      if (seen.count(y) || !is_weight_of(datum, y, lambda)) continue;
      if (seen.size() > 200000) throw ResourceLimit("weight enumeration exceeds 200000 weights");
      seen.insert(y);
      queue.push_back(y);
    }
  }
  return {seen.rbegin(), seen.rend()};
}

std::vector<Coweight> dominant_weights_below(const BasedRootDatum& datum, const Coweight& lambda) {
  std::vector<Coweight> out;
  for (const Coweight& mu : weights_of_irreducible(datum, lambda))
    if (datum.is_dominant(mu)) out.push_back(mu);
  std::stable_sort(out.begin(), out.end(), [&](const Coweight& a, const Coweight& b) {
    return datum.rho_pairing_exponent(a) > datum.rho_pairing_exponent(b);
  });
  return out;
}

std::map<Coweight, long> freudenthal_multiplicities(const BasedRootDatum& datum, const Coweight& lambda) {
  const auto B = invariant_form(datum);
  const Coweight& two_rho = datum.two_rho_coroot();
  std::map<Coweight, long> mult;
  // descending height: every weight needed on the right-hand side is already known
  for (const Coweight& mu : dominant_weights_below(datum, lambda)) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    mpz_class rhs = 0;
    for (const Root& a : datum.positive_roots()) {
      Coweight beta(a.coroot);
      Coweight nu = mu + beta;
      while (is_weight_of(datum, nu, lambda)) {
        rhs += mpz_class(mult.at(datum.dominant_representative(nu))) * form(B, nu, beta);
        nu += beta;
      }
    }
    rhs *= 2;
    long lhs = form(B, lambda - mu, lambda + mu + two_rho);
    if (lhs <= 0) throw ConsistencyError("Freudenthal denominator vanished at " + mu.str());
    if (rhs % lhs != 0) throw ConsistencyError("non-integral Freudenthal multiplicity at " + mu.str());
    mpz_class m = rhs / lhs;
    mult[mu] = m.get_si();
  }
  return mult;
}

SymmetricFunction weyl_character(const BasedRootDatum& datum, const Coweight& lambda) {
  if (datum.is_minuscule(lambda)) {
    if (!datum.is_dominant(lambda)) throw ValidationError("highest weight must be dominant, got " + lambda.str());
    return orbit_character(datum, lambda);
  }
  SymmetricFunction chi;
  for (const auto& [mu, m] : freudenthal_multiplicities(datum, lambda))
    if (m != 0) chi += Laurent(m) * orbit_character(datum, mu);
  return chi;
}

std::vector<Coweight> minuscule_weights(const BasedRootDatum& datum, const Coweight& mu) {
  datum.check_coweight(mu);
  if (!datum.is_minuscule(mu)) throw ValidationError("coweight " + mu.str() + " is not minuscule for " + datum.label());
  return datum.weyl_orbit(mu);
}

SymmetricFunction ext_power_character(const BasedRootDatum& datum, const std::vector<Coweight>& weights,
                                      int i) {
  const int d = static_cast<int>(weights.size());
  if (i < 0 || i > d)
    throw ValidationError("exterior power index " + std::to_string(i) + " outside 0.." + std::to_string(d));
  const auto n = static_cast<std::size_t>(datum.rank());
  WeightMultiset f;
  std::vector<int> pick(static_cast<std::size_t>(i));
  for (int k = 0; k < i; ++k) pick[k] = k;
  while (true) {
    Coweight sum = Coweight::zero(n);
    for (int k : pick) sum += weights[static_cast<std::size_t>(k)];
    f.add_term(sum, Laurent(1));
    int k = i;
    while (k > 0 && pick[k - 1] == d - i + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (int j = k; j < i; ++j) pick[j] = pick[j - 1] + 1;
  }
  return SymmetricFunction(datum, std::move(f));
}

std::map<Coweight, Laurent> decompose(const BasedRootDatum& datum, const SymmetricFunction& f) {
  if (!is_weyl_invariant(datum, f.multiset())) throw ValidationError("decompose needs a W-invariant function");
  std::map<Coweight, Laurent> out;
  WeightMultiset rest = f.multiset();
  std::size_t guard = 0;
  while (!rest.is_zero()) {
    if (++guard > 100000) throw ConsistencyError("highest-weight stripping did not terminate");
    // a dominant support weight with maximal <2rho, .> is maximal for dominance
    const Coweight* top = nullptr;
    int top_height = 0;
    for (const auto& [lambda, c] : rest.terms()) {
      if (!datum.is_dominant(lambda)) continue;
      int h = datum.rho_pairing_exponent(lambda);
      if (!top || h > top_height || (h == top_height && *top < lambda)) {
        top = &lambda;
        top_height = h;
      }
    }
    if (!top) throw ConsistencyError("W-invariant function without dominant support");
    Coweight lambda = *top;
    Laurent c = rest.coeff(lambda);
    out[lambda] += c;
    rest -= c * weyl_character(datum, lambda).multiset();
  }
  return out;
}

mpz_class value_at_ones(const SymmetricFunction& f) {
  mpz_class s = 0;
  for (const auto& [lambda, c] : f.terms())
    for (const auto& [e, x] : c.terms()) s += x;
  return s;
}

}  // namespace hecke
