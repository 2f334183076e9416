#ifndef EISENCALC_JSON_IO_HPP
#define EISENCALC_JSON_IO_HPP

#include <json.hpp>

#include <eisencalc/classify.hpp>

namespace eisencalc
{

using Json = nlohmann::ordered_json;

// [3,4,1,2]
Json to_json(const Shuffle &w);
Shuffle shuffle_from_json(const Json &j, int m);

// [{"tag":"CHI","s_coeff":"1/2","const":"0/1"}, ...]
Json to_json(const LambdaTuple &lam);
LambdaTuple lambda_from_json(const Json &j);

// {"valuation":v|null,"coeffs":[{"num":..,"den":..}],"trunc":t|null}; null trunc means exact.
Json to_json(const LaurentSeries &x);
LaurentSeries series_from_json(const Json &j);

// {"num":[{"arg":"s+3/2","char":"trivial"}],"den":[...],"point":"1/1"|null}
Json to_json(const ZetaProduct &p);
ZetaProduct product_from_json(const Json &j);

Json to_json(const CriticalPoint &pt);
CriticalPoint point_from_json(const Json &j);

Json to_json(const ChangeInterval &iv);
ChangeInterval interval_from_json(const Json &j);

// {"m","n","base","intervals","members","sum","pole":{"order","certainty"},"key"}
Json to_json(const OrbitReport &r);
OrbitReport orbit_from_json(const Json &j);

Json to_json(const Classification &c);
Classification classification_from_json(const Json &j);

Json to_json(const ConstantTermReport &r);

} // namespace eisencalc

#endif
