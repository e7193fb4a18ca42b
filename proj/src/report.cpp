#include "superyang/report.hpp"

namespace superyang {

Json json_rational(const Rational& r) { return rat_str(r); }

Json json_poly(const Poly1& p) {
    Json arr = Json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(rat_str(c));
    return arr;
}

Json json_ratfun(const RatFun& f) {
    Json j;
    j["num"] = json_poly(f.num());
    j["den"] = json_poly(f.den());
    return j;
}

Json json_weights(const std::vector<RatFun>& w) {
    Json arr = Json::array();
    for (const RatFun& f : w) arr.push_back(json_ratfun(f));
    return arr;
}

Json json_group_elem(const GroupAlg<Rational>& e) {
    Json j = Json::object();
    for (const auto& [p, c] : e.terms()) j[perm_str(p)] = rat_str(c);
    return j;
}

Json json_operator(const std::string& space, int d, const Mat<RatFun>& rows) {
    Json j;
    j["space"] = space;
    j["d"] = d;
    Json out = Json::array();
    for (long i = 0; i < rows.rows(); ++i) {
        Json row = Json::array();
        for (long k = 0; k < rows.cols(); ++k) row.push_back(json_ratfun(rows.at(i, k)));
        out.push_back(row);
    }
    j["rows"] = out;
    return j;
}

Json json_tuple(const DrinfeldTuple& t) {
    Json j;
    j["Qbar"] = json_poly(t.qbar);
    j["Q"] = json_poly(t.q);
    Json ps = Json::array();
    for (const Poly1& pi : t.p) ps.push_back(json_poly(pi));
    j["P"] = ps;
    return j;
}

std::string json_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace superyang
