#pragma once

#include "homalg/linmap.hpp"

namespace homalg {

// Derived maps used by every differential in the library.  All Sweedler sums
// are realized by composing with comultiplication matrices; each function
// below returns one explicit LinMap.

/// Delta^n : C -> C^(n+1), with Delta^0 = Id.  comul must be C -> C (x) C.
/// Any parenthesization gives the same matrix for coassociative comul; this
/// one nests on the left factor.
LinMap iterated_comul(const LinMap& comul, int n);

/// mu^n : A^n -> A, with mu^1 = Id.  n = 0 requires the unit K -> A.
LinMap iterated_mul(const LinMap& mul, const LinMap* unit, int n);

/// C -> C^q for q >= 0: counit when q = 0, Delta^(q-1) otherwise.
LinMap comul_to_power(const LinMap& comul, const LinMap& counit, int q);

/// C^q -> C for q >= 0: unit when q = 0, mu^q otherwise.
LinMap mul_from_power(const LinMap& mul, const LinMap& unit, int q);

/// The Sweedler split C^q -> C^q (x) C^q sending x_1...x_q to
/// sum x_1(1)...x_q(1) (x) x_1(2)...x_q(2).  This is also the factorwise
/// comultiplication Delta_{A^(x)p} of the tricomplex differentials.
LinMap sweedler_split(const LinMap& comul, int q);

/// Diagonal action H (x) A^n -> A^n, x (x) a_1...a_n |->
/// sum act(x_(1))(a_1) (x) ... (x) act(x_(n))(a_n).  n = 0 is the counit of
/// H.  With act = mul this is the left diagonal multiplication mu_l^n.
LinMap diag_action(const LinMap& act, const LinMap& comul_h, const LinMap& counit_h, int n);

/// Right diagonal multiplication C^q (x) C -> C^q,
/// y_1...y_q (x) x |-> sum y_1 x_(1) (x) ... (x) y_q x_(q); q = 0 is the counit.
LinMap diag_mul_right(const LinMap& mul, const LinMap& comul, const LinMap& counit, int q);

/// Factorwise product C^q (x) C^q -> C^q.
LinMap factorwise_mul(const LinMap& mul, int q);

/// Comodule power rho^n : A^n -> H (x) A^n, the shuffle-then-multiply
/// composite; n = 0 is the unit of H, n = 1 is rho itself.
LinMap coaction_power(const LinMap& coact, const LinMap& mul_h, const LinMap& unit_h, int n);

}  // namespace homalg
