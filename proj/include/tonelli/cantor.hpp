#pragma once

#include <vector>

#include "tonelli/multirectangle.hpp"

namespace tonelli {

enum class CantorKind { ternary, smith_volterra };

// Stage j of the middle-interval construction on [0,1]. removed collects
// every interval deleted up to stage j (open, disjoint); retained is D_j
// (closed, disjoint, 2^j components). L(removed) + L(retained) = 1 exactly.
struct CantorStage {
    CantorKind kind;
    int stage;
    Multirectangle removed;
    Multirectangle retained;
    Rational removed_length;
    Rational retained_length;
};

// Stage j removes the open middle interval of length 1/3^j (ternary) or
// 1/4^j (Smith-Volterra) from each retained interval of stage j-1.
CantorStage build_stage(CantorKind kind, int stage);

// Sum over stages of 2^(j-1) * (removed interval length at stage j),
// computed term by term in exact rationals. Cheap for any J.
Rational removed_measure(CantorKind kind, int stage);

// 1 for the ternary set, 1/2 for Smith-Volterra.
Rational limit_removed_measure(CantorKind kind);

enum class Membership { in_complement_open_set, in_limit_set };

struct MembershipResult {
    Membership verdict;
    // First digit position carrying a forbidden digit (1-based); 0 when in
    // the limit set.
    int forbidden_position;
};

// Digit test on the canonical base-3 / base-8 expansion: forbidden digit 1
// (ternary) resp. {3,4} (Smith-Volterra). A terminating rational has two
// representations; it is in the limit set when either avoids the forbidden
// digits. Rationals have eventually periodic digits, so the test terminates.
// For the ternary kind this decides exactly the geometric construction; for
// the Smith-Volterra kind the two agree at stage 1 only (the stage-j removed
// lengths 1/4^j fall off the base-8 cell structure from stage 2 on), so this
// member decides the base-8 digit set rather than the geometric one.
// Throws std::domain_error (OutOfDomain) if x is outside [0,1].
MembershipResult membership(CantorKind kind, const Rational& x);

// Open cover of finitely many points: interval n (1-based) is centered at
// the n-th point with length eps/2^(n+1), so L < eps/2 < eps.
Multirectangle cover_countable(const std::vector<Rational>& points, const Rational& eps);

// Fixed enumeration of the rationals of (0,1) in lowest terms, ordered by
// denominator then numerator: 1/2, 1/3, 2/3, 1/4, 3/4, 1/5, ...
std::vector<Rational> enumerate_unit_rationals(std::size_t count);

}  // namespace tonelli
