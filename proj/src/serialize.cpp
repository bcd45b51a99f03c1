#include "msym/serialize.hpp"

#include <stdexcept>

namespace msym {

Json to_json(const MPartition& p) { return Json{{"a", p.a}, {"lambda", strip_zeros(p.lambda)}}; }

MPartition mpartition_from_json(const Json& j) {
    MPartition p{j.at("a").get<Composition>(), j.at("lambda").get<Partition>()};
    for (int v : p.a)
        if (v < 0) throw std::invalid_argument("negative entry in label");
    if (!std::is_sorted(p.lambda.begin(), p.lambda.end(), std::greater<>()) ||
        (!p.lambda.empty() && p.lambda.back() < 0))
        throw std::invalid_argument("lambda must be a partition");
    p.lambda = strip_zeros(p.lambda);
    return p;
}

Json to_json(const MultiPoly& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back(Json{{"exponent", exponent_vector(e, f.nvars())}, {"coeff", c.to_string()}});
    return Json{{"nvars", f.nvars()}, {"terms", terms}};
}

MultiPoly poly_from_json(const Json& j) {
    const int n = j.at("nvars").get<int>();
    MultiPoly f(n);
    for (const auto& t : j.at("terms")) {
        const auto e = t.at("exponent").get<std::vector<int>>();
        f += MultiPoly::monomial(n, e, QtRational::parse(t.at("coeff").get<std::string>()));
    }
    return f;
}

Json to_json(const Expansion& e) {
    Json terms = Json::array();
    for (const auto& [lab, c] : e.coeffs) terms.push_back(Json{{"label", to_json(lab)}, {"coeff", c.to_string()}});
    return Json{{"basis", expansion_basis_name(e.basis)}, {"m", e.m}, {"degree", e.degree}, {"terms", terms}};
}

Expansion expansion_from_json(const Json& j) {
    Expansion e;
    e.basis = parse_expansion_basis(j.at("basis").get<std::string>());
    e.m = j.at("m").get<int>();
    e.degree = j.value("degree", 0);
    bool first = true;
    for (const auto& t : j.at("terms")) {
        MPartition lab = mpartition_from_json(t.at("label"));
        if (lab.m() != e.m) throw std::invalid_argument("expansion label with the wrong m");
        if (first && !j.contains("degree")) e.degree = lab.degree();
        if (lab.degree() != e.degree) throw std::invalid_argument("expansion labels of mixed degree");
        first = false;
        QtRational c = QtRational::parse(t.at("coeff").get<std::string>());
        if (!c.is_zero()) e.coeffs[std::move(lab)] += c;
    }
    return e;
}

Json to_json(const BiPoly& k) {
    Json terms = Json::array();
    for (const auto& [e, c] : k.poly().terms())
        terms.push_back(Json{{"x", BiPoly::x_exponent(e, k.nx())},
                             {"y", BiPoly::y_exponent(e, k.nx(), k.ny())},
                             {"coeff", c.to_string()}});
    return Json{{"nx", k.nx()}, {"ny", k.ny()}, {"terms", terms}};
}

}  // namespace msym
