#pragma once

#include "overring/classification.hpp"
#include "overring/numsg/semigroup.hpp"

namespace overring::numsg {

/// Classification of k[[S]]: a one-dimensional Noetherian local domain with
/// integral closure k[[X]] and nonzero conductor. Overrings are modeled by
/// the monomial ones (oversemigroups) plus the quotient field.
ClassificationReport nsg_report(const NumericalSemigroup& s);

}  // namespace overring::numsg
