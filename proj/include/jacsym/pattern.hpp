#pragma once

#include "jacsym/polymap.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace jacsym {

/// Cell of an N x N grid, 0-based.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell& a, const Cell& b) {
        return a.row == b.row && a.col == b.col;
    }
    friend bool operator<(const Cell& a, const Cell& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    }
};

/// The cell bijections generating the dihedral group of the square
/// (plus the identity, used for zero-region constraints).
enum class CellMap { identity, transpose, anti_transpose, h_flip, v_flip, central };

Cell apply_cell_map(CellMap m, Cell c, int n);
std::string cell_map_name(CellMap m);
CellMap cell_map_from_name(const std::string& name);

/// Sign rule of a constraint. `sigma` is the half-space product
/// sigma(i)*sigma(j) with sigma = -1 on the first half, +1 on the second;
/// `tau` the opposite. On an odd-dimension middle index the half-space sign
/// is ambiguous: such cells receive both signs, which forces them to zero.
enum class SignRule { plus, minus, sigma, minus_sigma, tau, minus_tau };

std::string sign_rule_name(SignRule s);
SignRule sign_rule_from_name(const std::string& name);

/// Returns the applicable signs at a cell: {+1}, {-1} or {+1,-1}.
std::vector<int> sign_values(SignRule s, Cell c, int n);

/// Named cell regions for region-restricted constraints.
enum class Region {
    all,
    diagonal,
    upper,               // strictly above the diagonal
    lower,               // strictly below the diagonal
    above_antidiag,      // i + j < n - 1 (0-based)
    below_antidiag,      // i + j > n - 1
    upper_right_quadrant // i < floor(n/2) and j >= ceil(n/2)
};

std::string region_name(Region r);
Region region_from_name(const std::string& name);
bool region_contains(Region r, Cell c, int n);

/// One constraint M[map(c)] = sign(c) * M[c] for all cells c in the region.
struct SignedConstraint {
    CellMap map = CellMap::transpose;
    SignRule sign = SignRule::plus;
    Region region = Region::all;
};

/// A signed symmetry pattern on N x N Jacobians.
struct Pattern {
    int dimension = 0;
    std::vector<SignedConstraint> constraints;
    std::optional<std::string> name;
};

/// Names understood by pattern_build, in catalog order.
const std::vector<std::string>& catalog_names();

/// Build a catalog pattern at dimension n. Throws on unknown names.
Pattern pattern_build(const std::string& name, int n);

/// Every constraint equation holds as a polynomial identity.
bool pattern_holds(const PolyMatrix& m, const Pattern& p);

/// All catalog patterns (at m's dimension) that m satisfies.
std::set<std::string> pattern_classify(const PolyMatrix& m);

/// Cells forced to zero by the constraint closure.
std::set<Cell> forced_zeros(const Pattern& p);

enum class Regime { none, det_zero, nilpotent };

struct InstanceSpec {
    int n_vars = 0;
    std::set<int> degree_set;
    Pattern pattern;
    Regime regime = Regime::none;
};

struct PatternSpace {
    int dimension;
    std::vector<PolyMap> basis;
};

/// Parametrizes all H with term degrees in the degree set whose Jacobian
/// satisfies the pattern; the constraints become a homogeneous linear system
/// on the unknown coefficients. Only linear constraints (regime none).
PatternSpace pattern_space(const InstanceSpec& spec);

/// Concrete form of a constraint on a fixed grid, for closure experiments:
/// cell -> (image cell, signs).
struct ConcreteConstraint {
    std::vector<std::pair<Cell, std::pair<Cell, std::vector<int>>>> relations;
};

ConcreteConstraint concretize(const SignedConstraint& c, int n);

/// Composite of two constraints as an implied relation; defined on cells
/// where the first applies and its image lies in the second's region.
ConcreteConstraint compose_constraints(const SignedConstraint& first,
                                       const SignedConstraint& second, int n);

/// pattern_space generalized to extra concrete relations (test support for
/// the closure-correctness property).
PatternSpace pattern_space_with_extra(const InstanceSpec& spec,
                                      const std::vector<ConcreteConstraint>& extra);

}  // namespace jacsym
