#pragma once

#include "json.hpp"

#include "promo/chain.hpp"
#include "promo/mixing.hpp"
#include "promo/monoid.hpp"
#include "promo/poset.hpp"
#include "promo/spectral.hpp"

namespace promo {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers; everything else is the
/// string "p/q".
Json rational_json(const Rational& x);
Json integer_json(const Integer& x);
Json set_json(ElementSet s);

Json to_json(const Poset& p);
Json to_json(const LinearForm& f);
Json to_json(const WeightVector& w);
/// {"mode", "basis": [...], "entries": [[[coeffs]]]}; entries[r][c].
Json to_json(const TransitionMatrix& m);
Json to_json(const RationalMatrix& m);
Json to_json(const SpectrumPrediction& s);
Json to_json(const ProbeResult& r);
Json to_json(const ConjectureReport& r);
Json to_json(const EggBox& box);
Json to_json(const std::vector<MixingRow>& rows);

}  // namespace promo
