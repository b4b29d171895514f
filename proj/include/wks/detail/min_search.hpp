#pragma once

#include <cmath>
#include <sstream>

#include "wks/errors.hpp"
#include "wks/numerics.hpp"

namespace wks::detail {

// Smallest n >= smallest order with z*(n) < 1 for which pred(n) is true.
// Doubling, then bisection over the (empirically monotone) predicate, then
// a walk-down guard in case the boundary window is not monotone.
template <class Pred>
long long min_true_n(double omega, double horizon, long long cap, const Pred& pred)
{
    const long long n_floor =
        static_cast<long long>(std::floor(omega * horizon / num::pi)) + 1;
    if (n_floor > cap) {
        throw UnsatisfiableError("cap below the smallest order with z* < 1");
    }

    long long lo = n_floor;
    long long hi = n_floor;
    if (!pred(hi)) {
        while (true) {
            lo = hi;
            if (hi > cap / 2) {
                if (hi >= cap || !pred(cap)) {
                    std::ostringstream msg;
                    msg << "no certifiable n up to cap " << cap;
                    throw UnsatisfiableError(msg.str());
                }
                hi = cap;
                break;
            }
            hi *= 2;
            if (pred(hi)) break;
        }
        while (hi - lo > 1) { // lo fails, hi passes
            const long long mid = lo + (hi - lo) / 2;
            if (pred(mid)) hi = mid; else lo = mid;
        }
    }
    while (hi > n_floor && pred(hi - 1)) --hi;
    return hi;
}

} // namespace wks::detail
