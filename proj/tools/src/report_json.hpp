#pragma once

#include "iwahori/checks.hpp"
#include "iwahori/chevalley.hpp"
#include "iwahori/rigid_series.hpp"
#include "iwahori/verma_bgg.hpp"

#include "json.hpp"

namespace iwahori::cli {

using nlohmann::json;

/// Every number leaves as an exact string or an integer; nothing is floating point.
json to_json(const Rational& q);
json to_json(const PValue& v);
json to_json(const IntVec& v);
json to_json(const RatVec& v);
json to_json(const GroupElement& g);
json to_json(const RootFactor& f, const RootDatum& d);
json to_json(const IwahoriFactorization& f, const RootDatum& d);
json to_json(const OrderedBasis& b);
json to_json(const SuiteReport& r);
json to_json(const BggVerdict& v);
json to_json(const Sp4Conditions& c);
json to_json(const Summand& s, const RootDatum& d);
json to_json(const HaarReport& r);
json to_json(const ConstantsLimitReport& r);

template <class C>
json series_json(const TruncatedSeries<C>& f) {
  json terms = json::array();
  for (const auto& [i, c] : f.terms()) {
    json coeff;
    if constexpr (std::is_same_v<C, Rational>)
      coeff = to_string(c);
    else
      coeff = c.to_string();
    terms.push_back({{"index", i}, {"coefficient", coeff}});
  }
  return {{"variables", f.nvars()}, {"degree_cap", f.degree_cap()}, {"terms", terms}};
}

}  // namespace iwahori::cli
