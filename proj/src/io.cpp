#include "jacsym/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace jacsym {

Json scalar_to_json(const Scalar& s) {
    return s.to_string();
}

Scalar scalar_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("scalar must be a JSON string");
    return Scalar::from_string(j.get<std::string>());
}

Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    // Leading term first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Json term;
        term["c"] = it->second.to_string();
        term["e"] = it->first;
        arr.push_back(std::move(term));
    }
    return arr;
}

Poly poly_from_json(const Json& j, int arity) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array of terms");
    Poly p(arity);
    for (const auto& term : j) {
        if (!term.contains("c") || !term.contains("e"))
            throw std::invalid_argument("polynomial term needs \"c\" and \"e\"");
        Monomial m = term["e"].get<Monomial>();
        if (static_cast<int>(m.size()) != arity)
            throw std::invalid_argument("term exponent length does not match arity");
        for (int e : m)
            if (e < 0) throw std::invalid_argument("negative exponent in term");
        p.add_term(m, scalar_from_json(term["c"]));
    }
    return p;
}

Poly poly_from_json_infer(const Json& j, int fallback_arity) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array of terms");
    int arity = fallback_arity;
    if (!j.empty()) {
        const auto& first = j.front();
        if (!first.contains("e")) throw std::invalid_argument("polynomial term needs \"e\"");
        arity = static_cast<int>(first["e"].size());
    }
    return poly_from_json(j, arity);
}

Json map_to_json(const PolyMap& f) {
    Json j;
    j["n_in"] = f.n_in();
    Json comps = Json::array();
    for (const auto& p : f.components()) comps.push_back(poly_to_json(p));
    j["components"] = std::move(comps);
    return j;
}

PolyMap map_from_json(const Json& j) {
    if (!j.contains("n_in") || !j.contains("components"))
        throw std::invalid_argument("map needs \"n_in\" and \"components\"");
    int n_in = j["n_in"].get<int>();
    std::vector<Poly> comps;
    for (const auto& pj : j["components"]) comps.push_back(poly_from_json(pj, n_in));
    return PolyMap(n_in, std::move(comps));
}

Json matrix_to_json(const PolyMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["arity"] = m.arity();
    Json entries = Json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) entries.push_back(poly_to_json(m.at(r, c)));
    j["entries"] = std::move(entries);
    return j;
}

PolyMatrix matrix_from_json(const Json& j) {
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    int arity = j.at("arity").get<int>();
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != rows * cols)
        throw std::invalid_argument("matrix entry count does not match shape");
    PolyMatrix m(rows, cols, arity);
    int k = 0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.set(r, c, poly_from_json(entries[k++], arity));
    return m;
}

Json scalar_matrix_to_json(const ScalarMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

ScalarMatrix scalar_matrix_from_json(const Json& j) {
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != rows)
        throw std::invalid_argument("matrix row count does not match shape");
    ScalarMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(entries[r].size()) != cols)
            throw std::invalid_argument("matrix column count does not match shape");
        for (int c = 0; c < cols; ++c) m.set(r, c, scalar_from_json(entries[r][c]));
    }
    return m;
}

Json pattern_to_json(const Pattern& p) {
    Json j;
    j["dimension"] = p.dimension;
    Json cons = Json::array();
    for (const auto& c : p.constraints) {
        Json cj;
        cj["map"] = cell_map_name(c.map);
        cj["sign"] = sign_rule_name(c.sign);
        if (c.region != Region::all) cj["region"] = region_name(c.region);
        cons.push_back(std::move(cj));
    }
    j["constraints"] = std::move(cons);
    if (p.name) j["name"] = *p.name;
    return j;
}

Pattern pattern_from_json(const Json& j) {
    Pattern p;
    p.dimension = j.at("dimension").get<int>();
    if (p.dimension < 1) throw std::invalid_argument("pattern dimension must be at least 1");
    for (const auto& cj : j.at("constraints")) {
        SignedConstraint c;
        c.map = cell_map_from_name(cj.at("map").get<std::string>());
        c.sign = sign_rule_from_name(cj.at("sign").get<std::string>());
        if (cj.contains("region")) c.region = region_from_name(cj["region"].get<std::string>());
        p.constraints.push_back(c);
    }
    if (j.contains("name")) p.name = j["name"].get<std::string>();
    return p;
}

Json witnesses_to_json(const std::vector<DependenceWitness>& ws) {
    Json arr = Json::array();
    for (const auto& w : ws) {
        Json wj;
        Json lam = Json::array();
        for (const auto& v : w.lambda) lam.push_back(v.to_string());
        wj["lambda"] = std::move(lam);
        wj["certificate"] = w.certificate.to_string();
        arr.push_back(std::move(wj));
    }
    return arr;
}

Json planar_form_to_json(const PlanarHessianForm& f) {
    Json j;
    j["g"] = poly_to_json(f.g);
    j["a"] = rational_to_string(f.a);
    j["b"] = rational_to_string(f.b);
    j["c"] = rational_to_string(f.c);
    j["d"] = rational_to_string(f.d);
    return j;
}

std::string digest(const Json& j) {
    std::string dump = j.dump();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : dump) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << std::hex;
    for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xf);
    return os.str();
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

}  // namespace jacsym
