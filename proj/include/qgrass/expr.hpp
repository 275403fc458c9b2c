#pragma once

/**
 * @file expr.hpp
 * @brief One-shot evaluator for minor-product expressions.
 *
 * Grammar (no implicit multiplication):
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := factor ('*' factor)*
 *   factor := ('-' | '+')* atom ('^' ('-')? integer)?
 *   atom   := integer | 'q' | 'p' | 't' | minor | '(' expr ')'
 *   minor  := '[' integer (',' integer)* ']'
 *
 * Minor literals are maximal minors of the (m, n) quantum matrix, so they
 * must list exactly m strictly increasing columns in 1..n. q = t^m, p = t^2.
 * Negative powers demand an invertible base (a monomial scalar with unit
 * coefficient). Everything evaluates to a canonical-form NCPoly; pure
 * scalars come back as scalar polynomials.
 */

#include <string>

#include "qgrass/minors.hpp"

namespace qgr {

/// Throws Error(ParseError) on bad syntax, including a malformed or
/// wrong-size minor literal; other Err kinds can surface from arithmetic
/// (e.g. NotAUnit for an uninvertible negative power).
NCPoly eval_expression(const std::string& text, int m, int n);

}  // namespace qgr
