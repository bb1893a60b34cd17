#pragma once

// Generating functions over G(r,n): q-integers, Eulerian polynomials, and the
// finv / wdes distributions with their closed forms expanded without
// denominators.

#include "flagweak/core.hpp"
#include "flagweak/poly.hpp"

namespace flagweak {

/// [m]_q = 1 + q + ... + q^{m-1}; [0]_q = 0. Throws for m < 0.
UniPoly q_int(int m);

/// prod_{i=1}^n [r*i]_q
UniPoly prod_q_int(int r, int n);

/// sum over G(r,n) of q^finv, by enumeration.
UniPoly finv_genfun(const GroupContext& ctx, int jobs = 1);

/// E_n(t) = sum over S_n of t^des.
UniPoly eulerian(int n);

/// S_n(q,t) = sum over S_n of q^inv t^des.
BiPoly sn_qt(int n);

/// sum over G(r,n) of t^wdes, wdes counted as down covers.
UniPoly wdes_genfun(const GroupContext& ctx, int jobs = 1);

/// (1+(r-1)t)^n E_n(rt / (1+(r-1)t)) as sum_v (rt)^des(v) (1+(r-1)t)^(n-des(v)).
UniPoly wdes_rhs(int r, int n);

bool check_wdes_identity(const GroupContext& ctx, int jobs = 1);

/// sum over G(r,n) of q^finv t^wdes.
BiPoly bivariate_genfun(const GroupContext& ctx, int jobs = 1);

/// (1+[r-1]_q qt)^n S_n(q^r, [r]_q t / (1+[r-1]_q qt)) as
/// sum_v q^(r inv v) ([r]_q t)^des(v) (1+[r-1]_q qt)^(n-des(v)).
BiPoly bivariate_rhs(int r, int n);

bool check_bivariate_identity(const GroupContext& ctx, int jobs = 1);

}  // namespace flagweak
