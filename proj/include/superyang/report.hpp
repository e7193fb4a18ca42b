#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "superyang/drinfeld.hpp"
#include "superyang/groupalg.hpp"
#include "superyang/linalg.hpp"
#include "superyang/ratfun.hpp"

namespace superyang {

/// All machine output is JSON with insertion-ordered keys, so identical
/// inputs dump to identical bytes.
using Json = nlohmann::ordered_json;

/// "p/q", or "p" when the denominator is 1.
Json json_rational(const Rational& r);

/// Ascending coefficient array of rational strings; the zero polynomial is [].
Json json_poly(const Poly1& p);

/// {"num": [...], "den": [...]} with both sides coefficient arrays.
Json json_ratfun(const RatFun& f);

/// Array of rational-function objects.
Json json_weights(const std::vector<RatFun>& w);

/// Map from one-line permutation strings to rational strings; deterministic
/// because the element iterates in permutation order.
Json json_group_elem(const GroupAlg<Rational>& e);

/// {"space": label, "d": sites, "rows": [[RatFun, ...], ...]} with rows in
/// basis order.
Json json_operator(const std::string& space, int d, const Mat<RatFun>& rows);

/// {"Qbar": [...], "Q": [...], "P": [[...], ...]} with coefficient arrays.
Json json_tuple(const DrinfeldTuple& t);

/// Canonical dump: two-space indent, LF line endings, trailing newline.
std::string json_dump(const Json& j);

}  // namespace superyang
