#include "hecke/json_io.hpp"

namespace hecke {

namespace {

IntVector int_vector(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array of integers");
  IntVector out;
  for (const Json& e : j) {
    if (!e.is_number_integer()) throw ValidationError(std::string(what) + " must be an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<IntVector> int_vectors(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array of integer arrays");
  std::vector<IntVector> out;
  for (const Json& e : j) out.push_back(int_vector(e, what));
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const Coweight& lambda) { return Json(lambda.values()); }

Coweight coweight_from_json(const Json& j) { return Coweight(int_vector(j, "coweight")); }

Json to_json(const WeightMultiset& f) {
  Json out = Json::array();
  // lexicographically descending
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    out.push_back({{"weight", to_json(it->first)}, {"coeff", it->second.str()}});
  return out;
}

Json to_json(const SymmetricFunction& f) { return to_json(f.multiset()); }

SymmetricFunction symmetric_function_from_json(const BasedRootDatum& datum, const Json& j) {
  if (!j.is_array()) throw ValidationError("symmetric function must be an array of {weight, coeff}");
  WeightMultiset f;
  for (const Json& term : j) {
    Coweight lambda = coweight_from_json(field(term, "weight"));
    datum.check_coweight(lambda);
    const Json& c = field(term, "coeff");
    if (!c.is_string()) throw ValidationError("coeff must be a Laurent string");
    f.add_term(lambda, Laurent::parse(c.get<std::string>()));
  }
  return SymmetricFunction(datum, std::move(f));
}

Json to_json(const BasedRootDatum& datum) {
  Json out;
  out["family"] = family_name(datum.family());
  out["rank"] = datum.family() == Family::custom ? datum.rank() : datum.group_parameter();
  out["label"] = datum.label();
  out["lattice_rank"] = datum.rank();
  out["simple_roots"] = datum.simple_roots();
  out["simple_coroots"] = datum.simple_coroots();
  return out;
}

BasedRootDatum datum_from_json(const Json& j) {
  const Json& fam = field(j, "family");
  const Json& rank = field(j, "rank");
  if (!fam.is_string()) throw ValidationError("family must be a string");
  if (!rank.is_number_integer()) throw ValidationError("rank must be an integer");
  const std::string name = fam.get<std::string>();
  if (name == "custom") {
    std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "custom";
    return BasedRootDatum::custom(label, rank.get<int>(), int_vectors(field(j, "simple_roots"), "simple_roots"),
                                  int_vectors(field(j, "simple_coroots"), "simple_coroots"));
  }
  BasedRootDatum d = BasedRootDatum::standard(parse_family(name), rank.get<int>());
  if (j.contains("simple_roots") && int_vectors(j["simple_roots"], "simple_roots") != d.simple_roots())
    throw ValidationError("simple_roots do not match the standard " + d.label() + " datum");
  if (j.contains("simple_coroots") && int_vectors(j["simple_coroots"], "simple_coroots") != d.simple_coroots())
    throw ValidationError("simple_coroots do not match the standard " + d.label() + " datum");
  return d;
}

Json to_json(const HeckePolynomial& h) {
  Json out;
  out["group"] = h.group;
  out["mu"] = to_json(h.mu);
  out["twist"] = {{"preset", h.twist.preset_name()}, {"exponent", h.twist_exponent}};
  out["e_over_f"] = h.e_over_f;
  out["degree"] = h.degree();
  Json coeffs = Json::array();
  for (const SphericalElement& c : h.coefficients) coeffs.push_back(to_json(c));
  out["coefficients"] = std::move(coeffs);
  return out;
}

Json to_json(const ScalarDomain& dom) {
  Json out;
  switch (dom.kind()) {
    case DomainKind::formal: out["kind"] = "formal"; break;
    case DomainKind::rational:
      out["kind"] = "rational";
      out["v"] = dom.v_value().get_str();
      break;
    case DomainKind::prime_field:
      out["kind"] = "prime_field";
      out["ell"] = dom.ell();
      out["v"] = dom.v_image();
      out["q"] = dom.q_residue();
      break;
  }
  out["describe"] = dom.describe();
  return out;
}

Json to_json(const SatakeParameter& s) { return {{"domain", to_json(s.domain())}, {"entries", s.entry_strings()}}; }

Json to_json(const FrobeniusMatrix& m) {
  Json weights = Json::array();
  for (const Coweight& w : m.weights) weights.push_back(to_json(w));
  Json diag = Json::array();
  for (const Scalar& x : m.diagonal) diag.push_back(x.str());
  return {{"weights", std::move(weights)}, {"diagonal", std::move(diag)}};
}

Json to_json(const ScalarMatrix& m) { return Json(m.to_strings()); }

Json to_json(const RelationReport& r) {
  Json out;
  out["relation"] = r.relation;
  if (!r.group.empty()) out["group"] = r.group;
  if (!r.mu.empty()) out["mu"] = r.mu;
  if (!r.twist.empty()) out["twist"] = r.twist;
  if (r.twist_exponent) out["twist_exponent"] = *r.twist_exponent;
  out["domain"] = r.domain;
  out["parameter"] = r.parameter;
  out["residual"] = to_json(r.residual);
  out["pass"] = r.pass;
  if (r.unipotent) out["unipotent"] = *r.unipotent;
  if (r.excursion_identity) out["excursion_identity"] = *r.excursion_identity;
  return out;
}

Json to_json(const AffineWeylGroup& group, const AffineHeckeElement& h) {
  Json out = Json::array();
  for (const auto& [x, c] : h.terms())
    out.push_back({{"translation", to_json(x.translation)},
                   {"finite_word", group.finite_group().element(x.finite).word},
                   {"coeff", c.str()}});
  return out;
}

Json to_json(const AffineWeylGroup& group, const FracScaled<AffineHeckeElement>& h) {
  return {{"terms", to_json(group, h.numerator)}, {"denominator", h.denominator.str()}};
}

Json to_json(const SphericalCosetVector& x) {
  Json out = Json::array();
  for (auto it = x.coords.rbegin(); it != x.coords.rend(); ++it)
    out.push_back({{"lambda", to_json(it->first)}, {"coeff", it->second.str()}});
  return out;
}

}  // namespace hecke
