#pragma once

// JSON renderings of the library types. Key order is fixed so that output is
// byte-stable.

#include <json.hpp>

#include "hecke/hecke_poly.hpp"
#include "hecke/iwahori.hpp"

namespace hecke {

using Json = nlohmann::ordered_json;

Json to_json(const Coweight& lambda);
Coweight coweight_from_json(const Json& j);

Json to_json(const WeightMultiset& f);
Json to_json(const SymmetricFunction& f);
/// Parses [{weight, coeff}] and checks W-invariance against datum.
SymmetricFunction symmetric_function_from_json(const BasedRootDatum& datum, const Json& j);

/// {family, rank, simple_roots, simple_coroots}
Json to_json(const BasedRootDatum& datum);
/// Builds a standard datum when family is GL/SL/PGL/Sp, otherwise a validated custom one.
BasedRootDatum datum_from_json(const Json& j);

Json to_json(const HeckePolynomial& h);
Json to_json(const ScalarDomain& dom);
Json to_json(const SatakeParameter& s);
Json to_json(const FrobeniusMatrix& m);
Json to_json(const ScalarMatrix& m);
Json to_json(const RelationReport& r);

/// [{translation, finite_word, coeff}]
Json to_json(const AffineWeylGroup& group, const AffineHeckeElement& h);
/// {terms, denominator}
Json to_json(const AffineWeylGroup& group, const FracScaled<AffineHeckeElement>& h);
/// [{lambda, coeff}]
Json to_json(const SphericalCosetVector& x);

}  // namespace hecke
