#include "jacsym/pattern.hpp"

#include "jacsym/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jacsym {

Cell apply_cell_map(CellMap m, Cell c, int n) {
    int i = c.row, j = c.col, r = n - 1;
    switch (m) {
        case CellMap::identity: return {i, j};
        case CellMap::transpose: return {j, i};
        case CellMap::anti_transpose: return {r - j, r - i};
        case CellMap::h_flip: return {r - i, j};
        case CellMap::v_flip: return {i, r - j};
        case CellMap::central: return {r - i, r - j};
    }
    throw std::logic_error("unreachable cell map");
}

std::string cell_map_name(CellMap m) {
    switch (m) {
        case CellMap::identity: return "identity";
        case CellMap::transpose: return "transpose";
        case CellMap::anti_transpose: return "anti_transpose";
        case CellMap::h_flip: return "h_flip";
        case CellMap::v_flip: return "v_flip";
        case CellMap::central: return "central";
    }
    throw std::logic_error("unreachable cell map");
}

CellMap cell_map_from_name(const std::string& name) {
    for (CellMap m : {CellMap::identity, CellMap::transpose, CellMap::anti_transpose,
                      CellMap::h_flip, CellMap::v_flip, CellMap::central})
        if (cell_map_name(m) == name) return m;
    throw std::invalid_argument("unknown cell map: " + name);
}

namespace {

// Half-space sign of a 0-based index: -1 on the first half, +1 on the second,
// 0 marks the ambiguous middle of an odd dimension.
int half_sign(int idx, int n) {
    if (2 * (idx + 1) <= n) return -1;
    if (2 * idx >= n) return 1;
    return 0;
}

}  // namespace

std::string sign_rule_name(SignRule s) {
    switch (s) {
        case SignRule::plus: return "+";
        case SignRule::minus: return "-";
        case SignRule::sigma: return "sigma";
        case SignRule::minus_sigma: return "-sigma";
        case SignRule::tau: return "tau";
        case SignRule::minus_tau: return "-tau";
    }
    throw std::logic_error("unreachable sign rule");
}

SignRule sign_rule_from_name(const std::string& name) {
    for (SignRule s : {SignRule::plus, SignRule::minus, SignRule::sigma, SignRule::minus_sigma,
                       SignRule::tau, SignRule::minus_tau})
        if (sign_rule_name(s) == name) return s;
    throw std::invalid_argument("unknown sign rule: " + name);
}

std::vector<int> sign_values(SignRule s, Cell c, int n) {
    switch (s) {
        case SignRule::plus: return {1};
        case SignRule::minus: return {-1};
        case SignRule::sigma:
        case SignRule::minus_sigma:
        case SignRule::tau:
        case SignRule::minus_tau: {
            int si = half_sign(c.row, n);
            int sj = half_sign(c.col, n);
            // tau is the negated half split on each index, so the product
            // tau(i)tau(j) equals sigma(i)sigma(j); only the ambiguous middle
            // differs in bookkeeping, and there both rules yield both signs.
            int flip = (s == SignRule::minus_sigma || s == SignRule::minus_tau) ? -1 : 1;
            if (si == 0 || sj == 0) return {1, -1};
            return {flip * si * sj};
        }
    }
    throw std::logic_error("unreachable sign rule");
}

std::string region_name(Region r) {
    switch (r) {
        case Region::all: return "all";
        case Region::diagonal: return "diagonal";
        case Region::upper: return "upper";
        case Region::lower: return "lower";
        case Region::above_antidiag: return "above_antidiag";
        case Region::below_antidiag: return "below_antidiag";
        case Region::upper_right_quadrant: return "upper_right_quadrant";
    }
    throw std::logic_error("unreachable region");
}

Region region_from_name(const std::string& name) {
    for (Region r : {Region::all, Region::diagonal, Region::upper, Region::lower,
                     Region::above_antidiag, Region::below_antidiag,
                     Region::upper_right_quadrant})
        if (region_name(r) == name) return r;
    throw std::invalid_argument("unknown region: " + name);
}

bool region_contains(Region r, Cell c, int n) {
    switch (r) {
        case Region::all: return true;
        case Region::diagonal: return c.row == c.col;
        case Region::upper: return c.row < c.col;
        case Region::lower: return c.row > c.col;
        case Region::above_antidiag: return c.row + c.col < n - 1;
        case Region::below_antidiag: return c.row + c.col > n - 1;
        case Region::upper_right_quadrant:
            return half_sign(c.row, n) == -1 && half_sign(c.col, n) == 1;
    }
    throw std::logic_error("unreachable region");
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "sjc",    "rsjc",   "asjc",   "rasjc",  "dsjc",    "djc",  "hvjc",
        "havjc",  "ahvjc",  "ahavjc", "hvsjc",  "havsjc",  "ahvsjc", "ahavsjc",
        "crjc",   "cjc",    "acjc",   "trasjc", "rsnjc"};
    return names;
}

Pattern pattern_build(const std::string& name, int n) {
    if (n < 1) throw std::invalid_argument("pattern dimension must be at least 1");
    using C = SignedConstraint;
    auto make = [&](std::vector<C> cs) {
        Pattern p;
        p.dimension = n;
        p.constraints = std::move(cs);
        p.name = name;
        return p;
    };
    const C sjc{CellMap::transpose, SignRule::plus, Region::all};
    const C rsjc{CellMap::anti_transpose, SignRule::plus, Region::all};
    const C h_plus{CellMap::h_flip, SignRule::plus, Region::all};
    const C h_minus{CellMap::h_flip, SignRule::minus, Region::all};
    const C v_plus{CellMap::v_flip, SignRule::plus, Region::all};
    const C v_minus{CellMap::v_flip, SignRule::minus, Region::all};

    if (name == "sjc") return make({sjc});
    if (name == "rsjc") return make({rsjc});
    if (name == "asjc") return make({{CellMap::transpose, SignRule::minus, Region::all}});
    if (name == "rasjc") return make({{CellMap::anti_transpose, SignRule::minus, Region::all}});
    if (name == "dsjc") return make({{CellMap::transpose, SignRule::sigma, Region::all}});
    if (name == "djc") return make({{CellMap::central, SignRule::plus, Region::all}});
    if (name == "hvjc") return make({h_plus, v_plus});
    if (name == "havjc") return make({h_plus, v_minus});
    if (name == "ahvjc") return make({h_minus, v_plus});
    if (name == "ahavjc") return make({h_minus, v_minus});
    if (name == "hvsjc") return make({h_plus, v_plus, sjc});
    if (name == "havsjc") return make({h_plus, v_minus, sjc});
    if (name == "ahvsjc") return make({h_minus, v_plus, sjc});
    if (name == "ahavsjc") return make({h_minus, v_minus, sjc});
    if (name == "crjc") return make({sjc, rsjc});
    if (name == "cjc") return make({{CellMap::central, SignRule::tau, Region::all}});
    if (name == "acjc") return make({{CellMap::central, SignRule::minus_tau, Region::all}});
    if (name == "trasjc")
        return make({{CellMap::central, SignRule::minus, Region::diagonal}});
    if (name == "rsnjc")
        return make({rsjc, {CellMap::identity, SignRule::minus, Region::upper_right_quadrant}});
    throw std::invalid_argument("unknown pattern name: " + name);
}

bool pattern_holds(const PolyMatrix& m, const Pattern& p) {
    if (!m.is_square() || m.rows() != p.dimension)
        throw std::invalid_argument("matrix size does not match pattern dimension");
    int n = p.dimension;
    for (const auto& con : p.constraints) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Cell c{i, j};
                if (!region_contains(con.region, c, n)) continue;
                Cell t = apply_cell_map(con.map, c, n);
                for (int s : sign_values(con.sign, c, n)) {
                    const Poly& lhs = m.at(t.row, t.col);
                    Poly rhs = (s > 0) ? m.at(c.row, c.col) : -m.at(c.row, c.col);
                    if (lhs != rhs) return false;
                }
            }
        }
    }
    return true;
}

std::set<std::string> pattern_classify(const PolyMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("classification needs a square matrix");
    std::set<std::string> out;
    for (const auto& name : catalog_names()) {
        if (pattern_holds(m, pattern_build(name, m.rows()))) out.insert(name);
    }
    return out;
}

namespace {

// Union-find over cells with sign parity. A merge that relates a class to
// itself with both signs forces every cell in the class to zero.
struct SignedUnionFind {
    std::vector<int> parent, sign;
    std::vector<bool> zero;

    explicit SignedUnionFind(int n) : parent(n), sign(n, 1), zero(n, false) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }

    std::pair<int, int> find(int x) {
        if (parent[x] == x) return {x, 1};
        auto [root, s] = find(parent[x]);
        parent[x] = root;
        sign[x] *= s;
        return {root, sign[x]};
    }

    // Relation: val(b) = s * val(a).
    void relate(int a, int b, int s) {
        auto [ra, sa] = find(a);
        auto [rb, sb] = find(b);
        if (ra == rb) {
            if (sb != s * sa) zero[ra] = true;
            return;
        }
        parent[rb] = ra;
        sign[rb] = s * sa * sb;
        if (zero[rb]) zero[ra] = true;
    }

    bool is_zero(int x) {
        auto [root, s] = find(x);
        (void)s;
        return zero[root];
    }
};

}  // namespace

std::set<Cell> forced_zeros(const Pattern& p) {
    int n = p.dimension;
    SignedUnionFind uf(n * n);
    auto id = [n](Cell c) { return c.row * n + c.col; };
    for (const auto& con : p.constraints) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Cell c{i, j};
                if (!region_contains(con.region, c, n)) continue;
                Cell t = apply_cell_map(con.map, c, n);
                for (int s : sign_values(con.sign, c, n)) uf.relate(id(c), id(t), s);
            }
        }
    }
    std::set<Cell> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (uf.is_zero(i * n + j)) out.insert({i, j});
    return out;
}

ConcreteConstraint concretize(const SignedConstraint& con, int n) {
    ConcreteConstraint out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Cell c{i, j};
            if (!region_contains(con.region, c, n)) continue;
            Cell t = apply_cell_map(con.map, c, n);
            out.relations.push_back({c, {t, sign_values(con.sign, c, n)}});
        }
    }
    return out;
}

ConcreteConstraint compose_constraints(const SignedConstraint& first,
                                       const SignedConstraint& second, int n) {
    ConcreteConstraint out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Cell c{i, j};
            if (!region_contains(first.region, c, n)) continue;
            Cell mid = apply_cell_map(first.map, c, n);
            if (!region_contains(second.region, mid, n)) continue;
            Cell t = apply_cell_map(second.map, mid, n);
            std::vector<int> signs;
            for (int s1 : sign_values(first.sign, c, n))
                for (int s2 : sign_values(second.sign, mid, n)) signs.push_back(s1 * s2);
            std::sort(signs.begin(), signs.end());
            signs.erase(std::unique(signs.begin(), signs.end()), signs.end());
            out.relations.push_back({c, {t, signs}});
        }
    }
    return out;
}

namespace {

PatternSpace solve_space(const InstanceSpec& spec,
                         const std::vector<ConcreteConstraint>& relations) {
    int n = spec.n_vars;
    const auto monos = monomials_of_degrees(n, spec.degree_set);
    const int per_comp = static_cast<int>(monos.size());
    const int unknowns = n * per_comp;
    std::map<Monomial, int, GrlexLess> mono_index;
    for (int k = 0; k < per_comp; ++k) mono_index.emplace(monos[k], k);
    auto unknown_of = [&](int comp, int mono) { return comp * per_comp + mono; };

    // Coefficient of monomial mu in J[i][j] = dH_i/dx_j as a sparse functional
    // of the unknowns: the unknown (i, mu*x_j) contributes (mu_j + 1).
    // Equations: for each relation (c -> t, sign s) and each monomial mu of
    // J entries, coeff(J[t], mu) - s * coeff(J[c], mu) = 0.
    std::set<int> jac_degrees;
    for (int d : spec.degree_set)
        if (d >= 1) jac_degrees.insert(d - 1);
    const auto jac_monos = monomials_of_degrees(n, jac_degrees);

    auto entry_terms = [&](Cell cell, const Monomial& mu) {
        std::vector<std::pair<int, Scalar>> out;
        Monomial m = mu;
        m[cell.col] += 1;
        auto it = mono_index.find(m);
        if (it != mono_index.end())
            out.emplace_back(unknown_of(cell.row, it->second), Scalar(m[cell.col]));
        return out;
    };

    std::vector<SparseRow> rows;
    for (const auto& rel : relations) {
        for (const auto& [c, target] : rel.relations) {
            const auto& [t, signs] = target;
            for (int s : signs) {
                for (const auto& mu : jac_monos) {
                    SparseRow row;
                    for (auto& [u, coeff] : entry_terms(t, mu)) row.entries.emplace_back(u, coeff);
                    for (auto& [u, coeff] : entry_terms(c, mu))
                        row.entries.emplace_back(u, Scalar(-s) * coeff);
                    // merge duplicate columns (t may equal c)
                    std::sort(row.entries.begin(), row.entries.end(),
                              [](const auto& a, const auto& b) { return a.first < b.first; });
                    SparseRow merged;
                    for (auto& [u, coeff] : row.entries) {
                        if (!merged.entries.empty() && merged.entries.back().first == u)
                            merged.entries.back().second += coeff;
                        else
                            merged.entries.emplace_back(u, coeff);
                    }
                    std::erase_if(merged.entries,
                                  [](const auto& e) { return e.second.is_zero(); });
                    if (!merged.entries.empty()) rows.push_back(std::move(merged));
                }
            }
        }
    }

    NullspaceResult ns = nullspace(unknowns, rows);
    PatternSpace out;
    out.dimension = static_cast<int>(ns.basis.size());
    for (const auto& vec : ns.basis) {
        std::vector<Poly> comps;
        comps.reserve(n);
        for (int comp = 0; comp < n; ++comp) {
            Poly p(n);
            for (int k = 0; k < per_comp; ++k) {
                const Scalar& v = vec[unknown_of(comp, k)];
                if (!v.is_zero()) p.add_term(monos[k], v);
            }
            comps.push_back(std::move(p));
        }
        out.basis.emplace_back(n, std::move(comps));
    }
    return out;
}

}  // namespace

PatternSpace pattern_space(const InstanceSpec& spec) {
    if (spec.regime != Regime::none)
        throw std::invalid_argument("pattern_space handles linear constraints only (regime none)");
    if (spec.degree_set.empty()) throw std::invalid_argument("empty degree set");
    if (spec.pattern.dimension != spec.n_vars)
        throw std::invalid_argument("pattern dimension must equal n_vars");
    std::vector<ConcreteConstraint> relations;
    for (const auto& con : spec.pattern.constraints)
        relations.push_back(concretize(con, spec.n_vars));
    return solve_space(spec, relations);
}

PatternSpace pattern_space_with_extra(const InstanceSpec& spec,
                                      const std::vector<ConcreteConstraint>& extra) {
    if (spec.regime != Regime::none)
        throw std::invalid_argument("pattern_space handles linear constraints only (regime none)");
    if (spec.degree_set.empty()) throw std::invalid_argument("empty degree set");
    std::vector<ConcreteConstraint> relations;
    for (const auto& con : spec.pattern.constraints)
        relations.push_back(concretize(con, spec.n_vars));
    relations.insert(relations.end(), extra.begin(), extra.end());
    return solve_space(spec, relations);
}

}  // namespace jacsym
