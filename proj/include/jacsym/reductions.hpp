#pragma once

#include "jacsym/pattern.hpp"
#include "jacsym/polymap.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>

namespace jacsym {

/// What a reduction did to the classification and the Keller data.
struct ReductionReport {
    std::set<std::string> input_patterns;
    std::set<std::string> output_patterns;
    KellerFlags before{};
    KellerFlags after{};
    std::set<int> degrees_before;
    std::set<int> degrees_after;
    std::optional<bool> exact_roundtrip;
};

/// Doubling construction: the gradient of y^t F with reversal bookkeeping.
/// Sends an n-map x + H to a 2n-map whose Jacobian minus the identity is
/// anti-transpose symmetric; substituting y = 0 recovers (F, 0).
PolyMap meng_extend(const PolyMap& f);

/// The symmetric unitary conjugator (1/2)sqrt2 (I_N + i I_N^r).
ScalarMatrix hessequiv_matrix(int n);

/// Conjugation by hessequiv_matrix: swaps diagonal and anti-diagonal Jacobian
/// symmetry of the H-part, in both directions.
PolyMap sjc_rsjc_conj(const PolyMap& f);

/// The block conjugator [[I_n, I_n^r], [-I_n^r, I_n]] of size 2n.
ScalarMatrix rsjc_dsjc_matrix(int half);

enum class RsjcDsjcDirection { to_dsjc, to_rsjc };

/// Conjugation by rsjc_dsjc_matrix (to_dsjc) or its inverse (to_rsjc);
/// transports anti-diagonal symmetry to the signed diagonal one and back.
PolyMap rsjc_dsjc_conj(const PolyMap& f, RsjcDsjcDirection direction);

enum class StabilizeDirection { embed, project };

/// Insert (embed) or remove (project) a middle identity coordinate.
/// project requires the middle component to be the middle variable and no
/// other component to involve it.
PolyMap dsjc_stabilize(const PolyMap& f, StabilizeDirection direction);

/// The pairing construction: (F, f, Ftilde(y)) conjugated with
/// (x + y, x_{n+1}, x - y) and then with (x, x_{n+1}, y^r). With odd = false
/// the middle row and column are dropped and ff must be an n-map.
PolyMap djc_pair(const PolyMap& ff, const PolyMap& ftilde, bool odd);

/// Inverse of djc_pair on central-symmetric instances.
std::pair<PolyMap, PolyMap> djc_split(const PolyMap& g, bool odd);

/// F = (F + F^r)/2 + (F - F^r)/2; the parts carry the horizontal/vertical
/// symmetric and antisymmetric halves.
std::pair<PolyMap, PolyMap> center_decompose(const PolyMap& f);

/// Realification (Re F(x+iy), Im F(x+iy)) conjugated with (x, y^r); doubles
/// the dimension and lands in the signed central class over Q.
PolyMap realify(const PolyMap& f);

struct PowerLinearResult {
    ScalarMatrix b;                  // nilpotent Kronecker factor, B^2 = 0
    std::optional<ScalarMatrix> t;   // conjugator, present when the root is rational
};

/// Kronecker construction for power linear maps of even degree:
/// B = [[ab, -b^2], [a^2, -ab]] (x) A. T is returned when a*b^d - a^d*b has a
/// rational (d-1)-th root (always for d = 2), and then
/// T^{-1}(F, y)(T(x,y)) = (x,y) + (B(x,y))^{*d} for F = x + (Ax)^{*d}.
PowerLinearResult power_linear_even(const ScalarMatrix& a_matrix, int d, const Scalar& a,
                                    const Scalar& b);

/// Search |a|,|b| <= bound for integer pairs whose root is rational.
std::optional<std::pair<long, long>> power_linear_search_ab(int d, long bound = 10);

/// Dependence-problem doubling: (H(x), G(x, y)) with G the gradient lower
/// block of y^t H plus the padding (x^r)^{*d}. The Jacobian of the output
/// itself is anti-transpose symmetric.
PolyMap meng_extend_dp(const PolyMap& h, int d);

/// Report wrapper used by the CLI: classification of in/out H-parts plus
/// Keller data. `out` must be square; flags are computed on x + H when the
/// input is an H-style map (strip_identity false).
ReductionReport make_report(const PolyMap& in, const PolyMap& out, bool strip_identity);

}  // namespace jacsym
