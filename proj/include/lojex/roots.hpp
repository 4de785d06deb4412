#pragma once

#include "lojex/box.hpp"
#include "lojex/upoly.hpp"

#include <vector>

namespace lojex {

/// Certified isolation of all complex roots of a squarefree polynomial.
///
/// Approximations come from an Aberth iteration in MPFR; the result is then
/// certified exactly: with n the degree and W_k the Weierstrass correction at
/// the k-th approximation z_k, every root lies in a disk |z - z_k| <= n |W_k|
/// and a disk disjoint from the others holds exactly one root. The returned
/// boxes circumscribe those disks and are pairwise disjoint, so each holds
/// exactly one root and together they hold all of them.
///
/// Boxes have width roughly 2^-bits times the root scale. Throws
/// std::domain_error for constant or zero input.
std::vector<Box> isolate_roots(const QPoly &squarefree, long bits = 64);

/// Given a box isolating one root of `squarefree`, returns an isolating box
/// for the same root with width below `eps`.
Box refine_root(const QPoly &squarefree, const Box &box, const Rat &eps);

/// Index of the isolating box (from `boxes`) that holds the value enclosed by
/// `enclosure`, or -1 if the enclosure meets zero or several boxes.
int locate(const std::vector<Box> &boxes, const Box &enclosure);

} // namespace lojex
