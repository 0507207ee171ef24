#pragma once

#include "doctest.h"
#include "hyperdeg/error.hpp"

namespace testgen {

/// Runs fn and returns the code of the hyperdeg::Error it throws.
inline hyperdeg::ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const hyperdeg::Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return hyperdeg::ErrorCode::Overflow;
}

}  // namespace testgen
