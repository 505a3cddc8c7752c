#include "artin/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace artin {

Json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v < lo || v > hi) throw std::overflow_error("integer too large for JSON");
    return Json(v.convert_to<long long>());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected integer");
}

Json elem_to_json(const AffInt& e) {
    Json t = Json::array();
    for (const Int& x : e.t) t.push_back(int_to_json(x));
    return Json{{"t", std::move(t)}, {"p", e.p.one_line()}};
}

AffInt elem_from_json(const Json& j) {
    std::vector<Int> t;
    for (const Json& x : j.at("t")) t.push_back(int_from_json(x));
    Perm p = Perm::parse_one_line(j.at("p").get<std::string>());
    if (p.n() != static_cast<int>(t.size()))
        throw std::invalid_argument("element: |t| != |p|");
    return AffInt(std::move(t), std::move(p));
}

Json spec_to_json(const MorphismSpec& spec) {
    Json params = Json::array();
    for (const Int& x : spec.params) params.push_back(int_to_json(x));
    return Json{{"family", family_name(spec.family)},
                {"n", spec.n},
                {"params", std::move(params)}};
}

MorphismSpec spec_from_json(const Json& j) {
    MorphismSpec spec;
    spec.family = family_from_name(j.at("family").get<std::string>());
    spec.n = j.at("n").get<int>();
    for (const Json& x : j.at("params")) spec.params.push_back(int_from_json(x));
    validate_spec(spec);
    return spec;
}

Json word_to_json(const Word& w) {
    Json out = Json::array();
    for (const Letter& l : w) out.push_back(l.sign > 0 ? l.index : -l.index);
    return out;
}

Word word_from_json(const Json& j) {
    Word w;
    for (const Json& x : j) {
        int v = x.get<int>();
        if (v == 0) throw std::invalid_argument("word letter 0");
        w.push_back(Letter{v > 0 ? v : -v, v > 0 ? +1 : -1});
    }
    return w;
}

Json matrix_to_json(const std::vector<std::vector<Int>>& m) {
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const Int& x : row) r.push_back(int_to_json(x));
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace artin
