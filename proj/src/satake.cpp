#include "hecke/satake.hpp"

namespace hecke {

SatakeParameter::SatakeParameter(ScalarDomain domain, std::vector<Scalar> entries)
    : domain_(std::move(domain)), entries_(std::move(entries)) {
  for (const Scalar& e : entries_) {
    if (!domain_.contains(e))
      throw DomainMismatch("Satake parameter entry " + e.str() + " outside " + domain_.describe());
    if (!e.is_invertible()) throw ValidationError("Satake parameter entry " + e.str() + " is not invertible");
  }
}

SatakeParameter SatakeParameter::symbolic(std::size_t rank) {
  ScalarDomain dom = ScalarDomain::formal();
  std::vector<Scalar> xs;
  for (std::size_t j = 1; j <= rank; ++j) xs.push_back(dom.symbol(static_cast<int>(j)));
  return SatakeParameter(dom, std::move(xs));
}

SatakeParameter SatakeParameter::ones(const ScalarDomain& domain, std::size_t rank) {
  return SatakeParameter(domain, std::vector<Scalar>(rank, domain.one()));
}

Scalar SatakeParameter::power(const Coweight& lambda) const {
  if (lambda.size() != entries_.size())
    throw ValidationError("weight " + lambda.str() + " does not match a parameter with " +
                          std::to_string(entries_.size()) + " entries");
  Scalar r = domain_.one();
  for (std::size_t j = 0; j < entries_.size(); ++j)
    if (lambda[j] != 0) r *= entries_[j].pow(lambda[j]);
  return r;
}

SatakeParameter SatakeParameter::transformed(const IntMatrix& w) const {
  // the new point t satisfies t^lambda = s^{w lambda}: t_j = s^{w e_j}
  std::vector<Scalar> out;
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    Coweight e = Coweight::zero(entries_.size());
    e[j] = 1;
    out.push_back(power(w.apply(e)));
  }
  return SatakeParameter(domain_, std::move(out));
}

std::vector<std::string> SatakeParameter::entry_strings() const {
  std::vector<std::string> out;
  for (const Scalar& e : entries_) out.push_back(e.str());
  return out;
}

ReducedSymmetricFunction reduce(const SymmetricFunction& f, const ScalarDomain& dom) {
  ReducedSymmetricFunction r{dom, {}};
  for (const auto& [lambda, c] : f.terms()) {
    Scalar x = dom.reduce(c);
    if (!x.is_zero()) r.terms.emplace(lambda, std::move(x));
  }
  return r;
}

Scalar evaluate(const WeightMultiset& f, const SatakeParameter& s) {
  Scalar acc = s.domain().zero();
  for (const auto& [lambda, c] : f.terms()) acc += s.domain().reduce(c) * s.power(lambda);
  return acc;
}

Scalar evaluate(const ReducedSymmetricFunction& f, const SatakeParameter& s) {
  if (!(f.domain == s.domain()))
    throw DomainMismatch("function over " + f.domain.describe() + " evaluated at a parameter over " +
                         s.domain().describe());
  Scalar acc = s.domain().zero();
  for (const auto& [lambda, c] : f.terms) acc += c * s.power(lambda);
  return acc;
}

TwistConfig TwistConfig::parse(const std::string& text) {
  if (text == "paper") return {Preset::paper, 0};
  if (text == "classical") return {Preset::classical, 0};
  if (text.rfind("exp=", 0) == 0) {
    try {
      std::size_t used = 0;
      int e = std::stoi(text.substr(4), &used);
      if (used == text.size() - 4) return {Preset::explicit_exponent, e};
    } catch (const std::exception&) {
    }
  }
  throw ValidationError("twist must be paper, classical or exp=<int>, got '" + text + "'");
}

std::string TwistConfig::preset_name() const {
  switch (preset) {
    case Preset::paper: return "paper";
    case Preset::classical: return "classical";
    case Preset::explicit_exponent: return "explicit";
  }
  return "explicit";
}

int resolve_twist(const BasedRootDatum& datum, const Coweight& mu, const TwistConfig& twist, int e_over_f) {
  if (e_over_f < 1) throw ValidationError("[E:F] must be a positive integer");
  switch (twist.preset) {
    case TwistConfig::Preset::paper:
      return e_over_f * static_cast<int>(minuscule_weights(datum, mu).size());
    case TwistConfig::Preset::classical: return datum.rho_pairing_exponent(mu);
    case TwistConfig::Preset::explicit_exponent: return twist.exponent;
  }
  return 0;
}

FrobeniusMatrix frobenius_matrix(const BasedRootDatum& datum, const Coweight& mu, const SatakeParameter& s,
                                 int twist_exponent) {
  if (s.size() != static_cast<std::size_t>(datum.rank()))
    throw ValidationError("Satake parameter has " + std::to_string(s.size()) + " entries; " + datum.label() +
                          " needs " + std::to_string(datum.rank()));
  FrobeniusMatrix m{minuscule_weights(datum, mu), {}, s.domain()};
  Scalar scale = s.domain().v_power(twist_exponent);
  for (const Coweight& lambda : m.weights) m.diagonal.push_back(scale * s.power(lambda));
  return m;
}

Scalar trace_of(const FrobeniusMatrix& m, int i) {
  const int d = static_cast<int>(m.size());
  if (i < 0 || i > d) throw ValidationError("exterior power index out of range");
  // e_k of the first j entries, updated in place
  std::vector<Scalar> e(static_cast<std::size_t>(i) + 1, m.domain.zero());
  e[0] = m.domain.one();
  for (const Scalar& x : m.diagonal)
    for (int k = i; k >= 1; --k) e[k] += x * e[k - 1];
  return e[static_cast<std::size_t>(i)];
}

}  // namespace hecke
