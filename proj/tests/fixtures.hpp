#pragma once

#include "heckelab/coeffs.hpp"
#include "heckelab/sieve.hpp"

namespace heckelab::testing {

// Tables shared across the test binary; built on first use.
inline const heckelab::LambdaTable& lambda_20k() {
    static const heckelab::LambdaTable lam = [] {
        return heckelab::normalize(heckelab::build_tau_table(20'000));
    }();
    return lam;
}

inline const heckelab::SieveTables& sieve_20k() {
    static const heckelab::SieveTables sv = heckelab::build_sieve(20'000);
    return sv;
}

inline const heckelab::SieveTables& sieve_1m() {
    static const heckelab::SieveTables sv = heckelab::build_sieve(1'048'576);
    return sv;
}

}  // namespace heckelab::testing
