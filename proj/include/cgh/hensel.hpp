#pragma once

#include "cgh/error.hpp"
#include "cgh/laurent.hpp"

#include <algorithm>

namespace cgh {

// Newton iteration x <- x - F(x)/F'(x) on truncated Laurent series.
// F and dF evaluate the equation and its derivative at a series. The seed
// must be a simple approximate root. The result is known modulo t^T;
// intermediate work uses T + margin terms to absorb the precision that
// negative valuations cost.
template <class R, class F, class DF>
LaurentSeries<R> hensel_root(F&& eval, DF&& deriv, LaurentSeries<R> x, int T, int margin = 16, int max_iter = 64) {
    const int W = T + margin;
    x = x.truncated(W);
    int last_step = -(1 << 28);
    for (int iter = 0; iter < max_iter; ++iter) {
        LaurentSeries<R> f = eval(x);
        if (f.is_zero() && f.precision() >= W) break;
        LaurentSeries<R> df = deriv(x);
        if (df.is_zero()) throw DomainError("singular Newton iteration: derivative vanishes at the seed");
        if (!is_invertible(df.leading())) throw DomainError("singular Newton iteration: derivative leading coefficient is not invertible");
        int cap = W - df.valuation() + std::max(0, f.valuation());
        LaurentSeries<R> step = (f * df.inverse(cap)).truncated(W);
        if (step.is_zero()) break;
        if (step.valuation() <= last_step) throw DomainError("Newton iteration does not converge");
        last_step = step.valuation();
        x = (x - step).truncated(W);
        if (step.valuation() >= T) break;
    }
    if (x.precision() < T) throw PrecisionError("Newton iteration lost too much precision; raise the margin");
    return x.truncated(T);
}

} // namespace cgh
