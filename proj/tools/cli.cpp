#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <set>
#include <sstream>

#include "hecke/json_io.hpp"

namespace hecke::cli {

// ---------------------------------------------------------------------------
// helpers

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  gen_.seed(seq);
}

std::uint64_t TrialRng::below(std::uint64_t n) {
  if (n == 0) throw ValidationError("empty sampling range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = gen_();
  while (x >= limit);
  return x % n;
}

long TrialRng::range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

namespace {

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ValidationError(what + " must be a non-negative integer, got '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw ValidationError(what + " is out of range: '" + s + "'");
  }
}

}  // namespace

ScalarDomain parse_field(const std::string& text) {
  if (text == "formal") return ScalarDomain::formal();
  if (text.rfind("rat:v=", 0) == 0) {
    std::string body = text.substr(6);
    mpq_class v;
    if (body.empty() || v.set_str(body, 10) != 0 || (body.find('/') != std::string::npos && v.get_den() == 0))
      throw ValidationError("malformed rational v in '" + text + "'");
    v.canonicalize();
    if (v == 0) throw ValidationError("v must be nonzero");
    return ScalarDomain::rational(v);
  }
  if (text.rfind("ell=", 0) == 0) {
    std::map<std::string, std::string> kv;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
      auto eq = part.find('=');
      if (eq == std::string::npos) throw ValidationError("malformed field component '" + part + "'");
      if (!kv.emplace(part.substr(0, eq), part.substr(eq + 1)).second)
        throw ValidationError("repeated field component '" + part + "'");
    }
    for (const auto& [k, v] : kv)
      if (k != "ell" && k != "v" && k != "q") throw ValidationError("unknown field component '" + k + "'");
    if (!kv.count("v")) throw ValidationError("prime field needs v=<residue>");
    std::uint64_t ell = parse_u64(kv["ell"], "ell");
    std::uint64_t v = parse_u64(kv["v"], "v");
    std::optional<std::uint64_t> q;
    if (kv.count("q")) q = parse_u64(kv["q"], "q");
    return ScalarDomain::prime_field(ell, v, q);
  }
  throw ValidationError("field must be formal, rat:v=<q> or ell=<p>,v=<r>[,q=<s>], got '" + text + "'");
}

namespace {

struct Piece {
  bool negative = false;
  std::string body;  // magnitude, no sign; "1" for the constant one
};

Piece render_coefficient(const std::map<Coweight, Laurent>& c, const std::string& sym) {
  Piece p;
  if (c.size() == 1) {
    const auto& [lambda, a] = *c.begin();
    bool zero_weight = std::all_of(lambda.begin(), lambda.end(), [](int x) { return x == 0; });
    std::string basis = zero_weight ? "" : sym + lambda.str();
    if (auto mono = a.as_monomial()) {
      p.negative = mono->first < 0;
      Laurent mag = p.negative ? -a : a;
      std::string m = mag.is_one() ? "" : mag.pretty();
      if (basis.empty()) p.body = m.empty() ? "1" : m;
      else p.body = m.empty() ? basis : m + "*" + basis;
      return p;
    }
    p.body = "(" + a.pretty() + ")" + (basis.empty() ? "" : "*" + basis);
    return p;
  }
  std::string inner;
  bool first = true;
  for (const auto& [lambda, a] : c) {
    Piece t = render_coefficient({{lambda, a}}, sym);
    inner += first ? (t.negative ? "-" : "") : (t.negative ? " - " : " + ");
    inner += t.body;
    first = false;
  }
  p.body = "(" + inner + ")";
  return p;
}

}  // namespace

std::string render_polynomial(const std::vector<std::map<Coweight, Laurent>>& coeffs, const std::string& sym) {
  const int d = static_cast<int>(coeffs.size()) - 1;
  std::string out;
  for (int i = 0; i <= d; ++i) {
    if (coeffs[static_cast<std::size_t>(i)].empty()) continue;
    Piece p = render_coefficient(coeffs[static_cast<std::size_t>(i)], sym);
    const int k = d - i;
    std::string x = k == 0 ? "" : (k == 1 ? "X" : "X^" + std::to_string(k));
    std::string term;
    if (x.empty()) term = p.body;
    else term = p.body == "1" ? x : p.body + "*" + x;
    if (out.empty()) out = (p.negative ? "-" : "") + term;
    else out += (p.negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

namespace {

// ---------------------------------------------------------------------------
// configuration

struct Config {
  std::string family = "GL";
  int rank = 2;
  std::string datum_file;
  std::string mu;
  std::string twist = "paper";
  int e_over_f = 1;
  std::string field = "formal";
  std::string basis = "satake";
  int trials = 10;
  std::uint64_t seed = 0;
  std::string out;
  std::size_t max_support = AffineHeckeAlgebra::default_max_support;
  int d = 2;
  int max_norm = 1;
  std::string s;
  std::string mode = "frobenius";
  bool unipotent = false;
};

BasedRootDatum load_datum(const Config& c) {
  if (!c.datum_file.empty()) {
    std::ifstream in(c.datum_file);
    if (!in) throw ValidationError("cannot read datum file '" + c.datum_file + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw ValidationError("datum file is not valid JSON: " + std::string(e.what()));
    }
    return datum_from_json(j);
  }
  return BasedRootDatum::standard(parse_family(c.family), c.rank);
}

Coweight load_mu(const BasedRootDatum& D, const Config& c) {
  if (c.mu.empty()) throw ValidationError("--mu is required");
  Coweight mu = Coweight::parse(c.mu);
  D.check_coweight(mu);
  if (!D.is_minuscule(mu)) throw ValidationError("mu = " + mu.str() + " is not minuscule");
  return mu;
}

void require_trials(const Config& c) {
  if (c.trials < 1) throw ValidationError("--trials must be positive");
}

Scalar random_unit(const ScalarDomain& dom, TrialRng& rng) {
  switch (dom.kind()) {
    case DomainKind::prime_field: return dom.from_int(static_cast<unsigned long>(1 + rng.below(dom.ell() - 1)));
    case DomainKind::rational: {
      long num = rng.range(1, 9) * (rng.below(2) ? -1 : 1);
      long den = rng.range(1, 9);
      mpq_class x(num, den);
      x.canonicalize();
      return Scalar(x);
    }
    case DomainKind::formal: {
      Scalar u = dom.v_power(static_cast<int>(rng.range(-2, 2)));
      return rng.below(2) ? -u : u;
    }
  }
  return dom.one();
}

/// Unit-diagonal times unitriangular factors: always invertible in any domain.
ScalarMatrix random_invertible(const ScalarDomain& dom, std::size_t n, TrialRng& rng) {
  ScalarMatrix L = ScalarMatrix::identity(dom, n), U = ScalarMatrix::identity(dom, n), D(dom, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    D(i, i) = random_unit(dom, rng);
    for (std::size_t j = 0; j < i; ++j) L(i, j) = dom.from_int(rng.range(-3, 3));
    for (std::size_t j = i + 1; j < n; ++j) U(i, j) = dom.from_int(rng.range(-3, 3));
  }
  return L * D * U;
}

std::vector<std::string> flatten(const ScalarMatrix& m) {
  std::vector<std::string> out;
  for (const auto& row : m.to_strings())
    for (const auto& e : row) out.push_back(e);
  return out;
}

void emit(std::ostream& os, Json j) { os << j.dump() << '\n'; }

Json with_trial(Json j, std::uint64_t seed, int trial) {
  j["seed"] = seed;
  j["trial"] = trial;
  return j;
}

std::vector<Coweight> dominant_box(const BasedRootDatum& D, int bound) {
  if (bound < 0) throw ValidationError("--max-norm must be non-negative");
  const auto n = static_cast<std::size_t>(D.rank());
  std::vector<Coweight> out;
  IntVector c(n, -bound);
  while (true) {
    Coweight x(c);
    if (D.is_dominant(x)) out.push_back(x);
    std::size_t k = 0;
    while (k < n && c[k] == bound) c[k++] = -bound;
    if (k == n) break;
    ++c[k];
  }
  return out;
}

// ---------------------------------------------------------------------------
// commands

int cmd_datum(const Config& c, std::ostream& os) {
  BasedRootDatum D = load_datum(c);
  Json out;
  out["datum"] = to_json(D);
  out["weyl_order"] = D.weyl_group().order();
  Json roots = Json::array();
  for (const Root& r : D.positive_roots()) roots.push_back({{"root", r.root}, {"coroot", r.coroot}});
  out["positive_roots"] = std::move(roots);
  out["two_rho_coroot"] = to_json(D.two_rho_coroot());
  Json mins = Json::array();
  for (const Coweight& mu : D.minuscule_dominants()) mins.push_back(to_json(mu));
  out["minuscule_dominants"] = std::move(mins);
  emit(os, std::move(out));
  return ok;
}

std::map<Coweight, Laurent> orbit_coordinates(const BasedRootDatum& D, const SymmetricFunction& f) {
  std::map<Coweight, Laurent> out;
  for (const auto& [lambda, a] : f.terms())
    if (D.is_dominant(lambda)) out.emplace(lambda, a);
  return out;
}

int cmd_poly(const Config& c, std::ostream& os) {
  BasedRootDatum D = load_datum(c);
  Coweight mu = load_mu(D, c);
  TwistConfig twist = TwistConfig::parse(c.twist);
  if (c.basis != "satake" && c.basis != "double-coset")
    throw ValidationError("--basis must be satake or double-coset");
  HeckePolynomial H = hecke_polynomial(D, mu, twist, c.e_over_f);

  Json out = to_json(H);
  out["basis"] = c.basis;
  std::vector<std::map<Coweight, Laurent>> satake_coords;
  for (const SphericalElement& f : H.coefficients) satake_coords.push_back(orbit_coordinates(D, f));
  out["satake_rendering"] = render_polynomial(satake_coords, "m");
  if (c.basis == "double-coset") {
    AffineHeckeAlgebra A(D, c.max_support);
    std::vector<std::map<Coweight, Laurent>> coset_coords;
    Json coeffs = Json::array();
    for (const SphericalElement& f : H.coefficients) {
      SphericalCosetVector x = A.satake_inverse(f);
      coeffs.push_back(to_json(x));
      coset_coords.push_back(x.coords);
    }
    out["double_coset_coefficients"] = std::move(coeffs);
    out["rendering"] = render_polynomial(coset_coords, "T");
  } else {
    out["rendering"] = out["satake_rendering"];
  }
  emit(os, std::move(out));
  return ok;
}

int cmd_eval(const Config& c, std::ostream& os) {
  BasedRootDatum D = load_datum(c);
  Coweight mu = load_mu(D, c);
  TwistConfig twist = TwistConfig::parse(c.twist);
  ScalarDomain dom = parse_field(c.field);
  HeckePolynomial H = hecke_polynomial(D, mu, twist, c.e_over_f);

  std::vector<Scalar> entries;
  if (c.s.empty()) {
    if (dom.kind() != DomainKind::formal) throw ValidationError("--s is required outside the formal domain");
    SatakeParameter sym = SatakeParameter::symbolic(static_cast<std::size_t>(D.rank()));
    entries = sym.entries();
  } else {
    std::stringstream ss(c.s);
    std::string part;
    while (std::getline(ss, part, ',')) entries.push_back(dom.parse(part));
  }
  SatakeParameter s(dom, entries);
  FrobeniusMatrix F = frobenius_matrix(D, mu, s, H.twist_exponent);
  std::vector<Scalar> values = evaluate_coefficients(H, s);

  Json out;
  out["group"] = H.group;
  out["mu"] = to_json(mu);
  out["twist"] = {{"preset", twist.preset_name()}, {"exponent", H.twist_exponent}};
  out["parameter"] = to_json(s);
  out["frobenius"] = to_json(F);
  Json coeffs = Json::array();
  for (const Scalar& x : values) coeffs.push_back(x.str());
  out["coefficient_values"] = std::move(coeffs);
  Json exc = Json::array();
  for (const ExcursionValue& e : excursion_values(D, mu, s, H.twist_exponent, true))
    exc.push_back({{"index", e.index}, {"value", e.value.str()}});
  out["excursion_values"] = std::move(exc);
  emit(os, std::move(out));
  return ok;
}

int verify_ch(const Config& c, std::ostream& os) {
  BasedRootDatum D = load_datum(c);
  Coweight mu = load_mu(D, c);
  TwistConfig twist = TwistConfig::parse(c.twist);
  ScalarDomain dom = parse_field(c.field);
  require_trials(c);
  if (c.mode != "frobenius" && c.mode != "arbitrary") throw ValidationError("--mode must be frobenius or arbitrary");
  HeckePolynomial H = hecke_polynomial(D, mu, twist, c.e_over_f);
  const auto d = static_cast<std::size_t>(H.degree());

  int status = ok;
  for (int t = 0; t < c.trials; ++t) {
    TrialRng rng(c.seed, static_cast<std::uint64_t>(t));
    ScalarMatrix M;
    std::vector<Scalar> values, traces;
    std::vector<std::string> parameter;
    if (c.mode == "frobenius") {
      std::vector<Scalar> entries;
      if (dom.kind() == DomainKind::formal)
        entries = SatakeParameter::symbolic(static_cast<std::size_t>(D.rank())).entries();
      else
        for (int j = 0; j < D.rank(); ++j) entries.push_back(random_unit(dom, rng));
      SatakeParameter s(dom, entries);
      FrobeniusMatrix F = frobenius_matrix(D, mu, s, H.twist_exponent);
      M = F.dense();
      values = evaluate_coefficients(H, s);
      for (std::size_t i = 0; i <= d; ++i) traces.push_back(trace_of(F, static_cast<int>(i)));
      parameter = s.entry_strings();
    } else {
      M = random_invertible(dom, d, rng);
      traces = exterior_traces(M);
      for (std::size_t i = 0; i <= d; ++i) values.push_back(i % 2 ? -traces[i] : traces[i]);
      parameter = flatten(M);
    }
    RelationReport r = cayley_hamilton_check(H, M, values);
    r.parameter = parameter;
    bool identity = excursion_relation_residual(traces, M).is_zero();
    for (std::size_t i = 0; i <= d; ++i)
      if (!(values[i] == (i % 2 ? -traces[i] : traces[i]))) identity = false;
    r.excursion_identity = identity;
    Json j = with_trial(to_json(r), c.seed, t);
    j["mode"] = c.mode;
    emit(os, std::move(j));
    if (!r.pass || !identity) status = verification_failed;
  }
  return status;
}

int verify_inertia(const Config& c, std::ostream& os) {
  ScalarDomain dom = parse_field(c.field);
  require_trials(c);
  if (c.d < 1 || c.d > 12) throw ValidationError("--d must lie in 1..12");
  const auto n = static_cast<std::size_t>(c.d);
  int status = ok;
  for (int t = 0; t < c.trials; ++t) {
    TrialRng rng(c.seed, static_cast<std::uint64_t>(t));
    ScalarMatrix M(dom, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (c.unipotent)
          M(i, j) = i == j ? dom.one() : (j == i + 1 ? dom.one() : (j > i ? dom.from_int(rng.range(-3, 3)) : dom.zero()));
        else
          M(i, j) = dom.from_int(rng.range(-5, 5));
      }
    RelationReport r = inertia_relation_check(c.d, M);
    r.parameter = flatten(M);
    Json j = with_trial(to_json(r), c.seed, t);
    j["d"] = c.d;
    emit(os, std::move(j));
    if (!r.pass || (c.unipotent && !r.unipotent.value_or(false))) status = verification_failed;
  }
  return status;
}

int verify_modell(const Config& c, std::ostream& os) {
  BasedRootDatum D = load_datum(c);
  Coweight mu = load_mu(D, c);
  TwistConfig twist = TwistConfig::parse(c.twist);
  ScalarDomain dom = parse_field(c.field);
  if (dom.kind() != DomainKind::prime_field) throw ValidationError("verify modell needs --field ell=<p>,v=<r>");
  require_trials(c);
  HeckePolynomial H = hecke_polynomial(D, mu, twist, c.e_over_f);
  ReducedHeckePolynomial R = reduce_mod_ell(H, dom);
  const auto rank = static_cast<std::size_t>(D.rank());
  // evaluate first, over the formal ring at the generic point
  std::vector<Scalar> generic = evaluate_coefficients(H, SatakeParameter::symbolic(rank));

  int status = ok;
  for (int t = 0; t < c.trials; ++t) {
    TrialRng rng(c.seed, static_cast<std::uint64_t>(t));
    std::vector<Scalar> entries;
    for (std::size_t j = 0; j < rank; ++j) entries.push_back(random_unit(dom, rng));
    SatakeParameter s(dom, entries);
    std::vector<Scalar> reduced_first = evaluate_coefficients(R, s);
    ScalarMatrix residual(dom, 1, generic.size());
    for (std::size_t i = 0; i < generic.size(); ++i) {
      Scalar evaluated_first = dom.specialize(std::get<MultiLaurent>(generic[i].storage()), entries);
      residual(0, i) = evaluated_first - reduced_first[i];
    }
    RelationReport r;
    r.relation = "modell";
    r.group = H.group;
    r.mu = mu.str();
    r.twist = twist.preset_name();
    r.twist_exponent = H.twist_exponent;
    r.domain = dom.describe();
    r.parameter = s.entry_strings();
    r.pass = residual.is_zero();
    r.residual = std::move(residual);
    emit(os, with_trial(to_json(r), c.seed, t));
    if (!r.pass) status = verification_failed;
  }
  return status;
}

Json laurent_matrix(const std::vector<std::vector<Laurent>>& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const Laurent& x : row) r.push_back(x.str());
    out.push_back(std::move(r));
  }
  return out;
}

int verify_satake(const Config& c, std::ostream& os) {
  BasedRootDatum D = load_datum(c);
  AffineHeckeAlgebra A(D, c.max_support);
  const std::string group = D.label();
  int status = ok;
  auto report = [&](Json j, bool pass) {
    j["pass"] = pass;
    emit(os, std::move(j));
    if (!pass) status = verification_failed;
  };

  // minuscule calibration: S(1_{K mu K}) = v^{<2rho, mu>} m_mu
  for (const Coweight& mu : D.minuscule_dominants()) {
    SphericalCosetVector x;
    x.coords.emplace(mu, Laurent(1));
    SymmetricFunction got = A.satake_transform(x);
    SymmetricFunction want = Laurent::v_power(D.rho_pairing_exponent(mu)) * orbit_character(D, mu);
    report({{"relation", "satake-calibration"}, {"group", group}, {"lambda", to_json(mu)},
            {"expected", to_json(want)}, {"computed", to_json(got)}},
           got == want);
  }

  // triangularity on the dominance closure of the box
  std::set<Coweight> closure;
  for (const Coweight& lambda : dominant_box(D, c.max_norm))
    for (const Coweight& nu : dominant_weights_below(D, lambda)) closure.insert(nu);
  SatakeMatrix m = A.satake_matrix({closure.begin(), closure.end()});
  bool triangular = true;
  for (std::size_t i = 0; i < m.basis.size(); ++i)
    for (std::size_t j = 0; j < m.basis.size(); ++j) {
      const Laurent& t = m.transform[i][j];
      if (i == j && t != Laurent::v_power(D.rho_pairing_exponent(m.basis[i]))) triangular = false;
      if (i != j && !t.is_zero() && !D.dominance_leq(m.basis[i], m.basis[j])) triangular = false;
    }
  Json basis = Json::array();
  for (const Coweight& b : m.basis) basis.push_back(to_json(b));
  report({{"relation", "satake-triangularity"}, {"group", group}, {"basis", basis},
          {"transform", laurent_matrix(m.transform)}, {"inverse", laurent_matrix(m.inverse_map)}},
         triangular);

  // round trip on the same set
  for (const Coweight& lambda : m.basis) {
    SymmetricFunction f = orbit_character(D, lambda);
    SymmetricFunction back = A.satake_transform(A.satake_inverse(f));
    report({{"relation", "satake-round-trip"}, {"group", group}, {"lambda", to_json(lambda)}}, back == f);
  }

  // e_K is idempotent
  auto e = A.spherical_idempotent();
  report({{"relation", "idempotent"}, {"group", group}, {"e_K", to_json(A.group(), e)}},
         AffineHeckeAlgebra::equal(A.multiply(e, e), e));

  // centrality of z_{m_lambda} against all simple generators and theta_{+-e_j}
  std::vector<AffineHeckeElement> gens;
  for (std::size_t i = 0; i < A.group().simple_reflections().size(); ++i) gens.push_back(A.simple_generator(i));
  for (std::size_t j = 0; j < static_cast<std::size_t>(D.rank()); ++j) {
    Coweight e_j = Coweight::zero(static_cast<std::size_t>(D.rank()));
    e_j[j] = 1;
    gens.push_back(A.theta(e_j));
    gens.push_back(A.theta(-e_j));
  }
  for (const Coweight& lambda : dominant_box(D, c.max_norm)) {
    AffineHeckeElement z = A.central_element(orbit_character(D, lambda));
    bool central = true;
    for (const AffineHeckeElement& g : gens)
      if (!(A.multiply(z, g) == A.multiply(g, z))) central = false;
    report({{"relation", "centrality"}, {"group", group}, {"lambda", to_json(lambda)},
            {"generators", gens.size()}, {"support", z.support_size()}},
           central);
  }
  return status;
}

int verify_newton(const Config& c, std::ostream& os) {
  BasedRootDatum D = load_datum(c);
  std::vector<Coweight> mus;
  if (c.mu.empty()) mus = D.minuscule_dominants();
  else mus.push_back(load_mu(D, c));
  int status = ok;
  for (const Coweight& mu : mus) {
    std::vector<Coweight> weights = minuscule_weights(D, mu);
    const int d = static_cast<int>(weights.size());
    std::vector<SymmetricFunction> e, p;
    for (int k = 0; k <= d; ++k) e.push_back(ext_power_character(D, weights, k));
    p.push_back(SymmetricFunction::constant(static_cast<std::size_t>(D.rank()), Laurent(d)));
    for (int k = 1; k <= d; ++k) {
      WeightMultiset pk;
      for (const Coweight& w : weights) pk.add_term(k * w, Laurent(1));
      p.push_back(SymmetricFunction(D, std::move(pk)));
    }
    // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
    bool newton = true;
    for (int k = 1; k <= d; ++k) {
      SymmetricFunction rhs;
      for (int i = 1; i <= k; ++i) {
        SymmetricFunction t = e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i)];
        if (i % 2 == 0) rhs -= t;
        else rhs += t;
      }
      if (!(Laurent(k) * e[static_cast<std::size_t>(k)] == rhs)) newton = false;
    }
    mpz_class total = 0;
    Json dims = Json::array();
    for (const SymmetricFunction& ek : e) {
      mpz_class dim = value_at_ones(ek);
      dims.push_back(dim.get_str());
      total += dim;
    }
    mpz_class two_d = 1;
    two_d <<= static_cast<unsigned>(d);
    bool pass = newton && total == two_d;
    Json j{{"relation", "newton"}, {"group", D.label()}, {"mu", to_json(mu)}, {"degree", d},
           {"newton_identities", newton}, {"exterior_dimensions", dims}, {"pass", pass}};
    emit(os, std::move(j));
    if (!pass) status = verification_failed;
  }
  return status;
}

Json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Hecke polynomials, Satake transforms and exact relation checks"};
  app.require_subcommand(1);

  auto group_opts = [&](CLI::App* sub) {
    sub->add_option("--family", c.family, "GL, SL, PGL or Sp")->capture_default_str();
    sub->add_option("--rank", c.rank, "n of GL_n, SL_n, PGL_n, Sp_n")->capture_default_str();
    sub->add_option("--datum", c.datum_file, "JSON datum file {family, rank, simple_roots, simple_coroots}");
    sub->add_option("--out", c.out, "write output to this file");
    sub->add_option("--max-support", c.max_support, "affine Hecke support bound")->capture_default_str();
  };
  auto poly_opts = [&](CLI::App* sub) {
    sub->add_option("--mu", c.mu, "minuscule coweight a,b,...");
    sub->add_option("--twist", c.twist, "paper, classical or exp=<int>")->capture_default_str();
    sub->add_option("--e-over-f", c.e_over_f, "[E:F]")->capture_default_str();
  };
  auto trial_opts = [&](CLI::App* sub) {
    sub->add_option("--field", c.field, "formal, rat:v=<q> or ell=<p>,v=<r>[,q=<s>]")->capture_default_str();
    sub->add_option("--trials", c.trials, "number of random trials")->capture_default_str();
    sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
  };

  CLI::App* datum = app.add_subcommand("datum", "describe a root datum");
  group_opts(datum);

  CLI::App* poly = app.add_subcommand("poly", "compute the Hecke polynomial");
  group_opts(poly);
  poly_opts(poly);
  poly->add_option("--basis", c.basis, "satake or double-coset")->capture_default_str();

  CLI::App* eval = app.add_subcommand("eval", "evaluate the Hecke polynomial at a Satake parameter");
  group_opts(eval);
  poly_opts(eval);
  eval->add_option("--field", c.field, "formal, rat:v=<q> or ell=<p>,v=<r>[,q=<s>]")->capture_default_str();
  eval->add_option("--s", c.s, "parameter entries a,b,...");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  CLI::App* ch = verify->add_subcommand("ch", "Cayley-Hamilton relation");
  group_opts(ch);
  poly_opts(ch);
  trial_opts(ch);
  ch->add_option("--mode", c.mode, "frobenius or arbitrary")->capture_default_str();
  CLI::App* inertia = verify->add_subcommand("inertia", "inertia degeneration");
  inertia->add_option("--d", c.d, "matrix size")->capture_default_str();
  inertia->add_flag("--unipotent", c.unipotent, "sample unipotent matrices");
  inertia->add_option("--out", c.out, "write output to this file");
  trial_opts(inertia);
  CLI::App* satake = verify->add_subcommand("satake", "Satake calibration, triangularity, centrality");
  group_opts(satake);
  satake->add_option("--max-norm", c.max_norm, "bound on |lambda|_inf")->capture_default_str();
  CLI::App* newton = verify->add_subcommand("newton", "Newton identities for minuscule weights");
  group_opts(newton);
  newton->add_option("--mu", c.mu, "minuscule coweight (default: all)");
  CLI::App* modell = verify->add_subcommand("modell", "reduction mod ell commutes with evaluation");
  group_opts(modell);
  poly_opts(modell);
  trial_opts(modell);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return ok;
    }
    err << error_json("usage", e.what()).dump() << '\n';
    return invalid_input;
  }

  std::ostringstream buffer;
  int code = ok;
  try {
    if (*datum) code = cmd_datum(c, buffer);
    else if (*poly) code = cmd_poly(c, buffer);
    else if (*eval) code = cmd_eval(c, buffer);
    else if (*ch) code = verify_ch(c, buffer);
    else if (*inertia) code = verify_inertia(c, buffer);
    else if (*satake) code = verify_satake(c, buffer);
    else if (*newton) code = verify_newton(c, buffer);
    else if (*modell) code = verify_modell(c, buffer);
  } catch (const ResourceLimit& e) {
    err << error_json("resource_limit", e.what()).dump() << '\n';
    return resource_guard;
  } catch (const ConsistencyError& e) {
    err << error_json("consistency", e.what()).dump() << '\n';
    return verification_failed;
  } catch (const DomainMismatch& e) {
    err << error_json("domain_mismatch", e.what()).dump() << '\n';
    return invalid_input;
  } catch (const Error& e) {
    err << error_json("validation", e.what()).dump() << '\n';
    return invalid_input;
  }

  if (c.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
      err << error_json("io", "cannot write '" + c.out + "'").dump() << '\n';
      return invalid_input;
    }
    f << buffer.str();
  }
  return code;
}

}  // namespace hecke::cli
