#pragma once

#include "cgh/rational.hpp"

namespace cgh::detail {

// Unqualified call so that argument-dependent lookup finds the overload for
// each coefficient type; containers with an is_zero member use this.
template <class T>
bool coeff_is_zero(const T& x) {
    return is_zero(x);
}

} // namespace cgh::detail
