#pragma once

/**
 * @file grass.hpp
 * @brief Quantum Grassmannian layer: quasi-commutation, quadratic relations,
 *        localization at a consecutive minor, noncommutative dehomogenisation.
 *
 * The consecutive minors [M_alpha] are normal elements (they quasi-commute
 * with every maximal minor), so the Grassmannian localizes at each of them by
 * an Ore construction with right denominators. A localized element is stored
 * as numer * [M_alpha]^(-k); moving a denominator across a homogeneous
 * element only costs a power of q, computed from quasi-commutation.
 *
 * Dehomogenisation at center alpha produces generators
 *
 *   x[i,j] = [ M_alpha + {tilde(j+alpha+m-1)} - {tilde(alpha+m-i)} ] * [M_alpha]^(-1)
 *
 * which satisfy the quantum (m x (n-m)) matrix relations with the same q.
 */

#include <map>
#include <optional>

#include "qgrass/kernel.hpp"
#include "qgrass/minors.hpp"
#include "qgrass/report.hpp"

namespace qgr {

/// All size-m subsets of {1..n} in lexicographic order.
std::vector<IndexSet> all_m_subsets(int m, int n);

/// c with u*v = q^c * v*u, when such an integer exists (q = t^m).
std::optional<int> try_quasi_exponent(const NCPoly& u, const NCPoly& v);

/// Same, but throws NotQuasiCommuting instead of returning nullopt.
int quasi_exponent(const NCPoly& u, const NCPoly& v);

/// The single-term lambda with a = lambda * b across all words, if any.
std::optional<Laurent> nc_monomial_ratio(const NCPoly& a, const NCPoly& b);

/// Every consecutive minor quasi-commutes with every maximal minor.
Report verify_consecutive_normality(int m, int n);

/// sum of coeff * [left] * [right] = 0 among maximal minors of an (m,n)
/// Grassmannian.
struct QuadraticRelation {
  int m = 0, n = 0;
  struct Term {
    Laurent coeff;
    IndexSet left, right;
  };
  std::vector<Term> terms;
};

NCPoly eval_relation(const QuadraticRelation& r);
std::string to_string(const QuadraticRelation& r);

/// All linear dependencies among the products [I][J] of two maximal minors,
/// computed content class by content class as exact kernels of the
/// coefficient matrix over the word basis. Each returned relation is
/// re-verified to evaluate to zero. Deterministic order.
std::vector<QuadraticRelation> quadratic_relations(int m, int n);

/// The (2,4) linear combination showing that cycling column indices without
/// twisting is not multiplicative: [23][14] - q[24][13] + q^2[12][34], which
/// is nonzero (it equals (q^4-q^2)[34][12]).
NCPoly nonautomorphism_witness();

/// Transport r to a larger Grassmannian: adjoin the complement of P (taken in
/// P's ambient) to every row of index sets. P must contain every index used
/// by r. Coefficients are re-read as powers of q for the new row count. The
/// result is re-verified to evaluate to zero.
QuadraticRelation muir_extend(const QuadraticRelation& r, const IndexSet& p);

/// numer * [M_alpha]^(-k) in the localization of the (m,n) Grassmannian.
struct Localized {
  int m = 0, n = 0, alpha = 1;
  int k = 0;
  NCPoly numer;
};

/// Builds a localized element, reducing k whenever the numerator factors as
/// v * [M_alpha] (detected by leading-term right division).
Localized loc_make(NCPoly u, int k, int alpha);

Localized loc_mul(const Localized& a, const Localized& b);
Localized loc_add(const Localized& a, const Localized& b);
Localized loc_sub(const Localized& a, const Localized& b);
Localized loc_scale(const Laurent& c, const Localized& a);
bool loc_is_zero(const Localized& a);

/// Equality by cross-multiplication with right denominators; never needs
/// reduction.
bool loc_eq(const Localized& a, const Localized& b);

/// lambda with a = lambda * b in the localization, if any.
std::optional<Laurent> loc_monomial_ratio(const Localized& a, const Localized& b);

std::string to_string(const Localized& a);

/// v with u = v * d, recovered by leading-term division in the normal word
/// basis; nullopt when u is not a right multiple of d.
std::optional<NCPoly> try_right_divide(const NCPoly& u, const NCPoly& d);

/// Z^n content of a localized element (numerator content minus k times the
/// denominator content). nullopt when the numerator is inhomogeneous.
std::optional<Content> loc_content(const Localized& a);

/// Split a localized element into content-homogeneous summands.
std::map<Content, Localized> loc_content_components(const Localized& a);

/// The dehomogenised generator x[i,j] at center alpha; 1 <= i <= m,
/// 1 <= j <= n-m.
Localized dehom_x(int i, int j, int alpha, int m, int n);

/// e with [M_alpha] * x[i,j] = q^e * x[i,j] * [M_alpha].
int sigma_exponent(int i, int j, int alpha, int m, int n);

/// Closed form of the inverse dehomogenisation on a minor of the x algebra:
/// rho(I,J,alpha) = [ M_alpha - ((alpha+m)-I) + ((alpha+m-1)+J) ] * [M_alpha]^(-1),
/// index arithmetic modulo n. Requires |I| = |J| (<= m).
Localized rho(const IndexSet& rows, const IndexSet& cols, int alpha, int m, int n);

/// Image of a maximal minor under dehomogenisation: an (n-m)-column minor of
/// the x algebra times y. rows/cols are produced in the x-model ambients
/// (m and n-m).
struct PhiImage {
  IndexSet rows, cols;
  int y_power = 1;
};
PhiImage phi_of_minor(const IndexSet& i, int alpha);

/// Evaluates the quantum minor permutation-sum over the dehomogenised
/// generators with localized multiplication.
Localized eval_x_minor(const IndexSet& rows, const IndexSet& cols, int alpha, int m, int n);

/// The dehomogenised generators satisfy the quantum (m x (n-m)) matrix
/// relations; also checks the round trip rho(phi([I])) * [M_alpha] = [I] and
/// that the closed form of rho matches generator evaluation.
Report verify_dehom_qmatrix(int m, int n, int alpha);

/// sigma exponent table checks for alpha = 1 and alpha = 2.
Report verify_sigma_tables(int m, int n);

}  // namespace qgr
