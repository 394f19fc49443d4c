#pragma once

#include <catch2/catch.hpp>

#include "gq/error.hpp"

// Runs fn, which must throw GraphError, and returns the error kind.
template <typename Fn>
gq::ErrorKind thrown_kind(Fn&& fn)
{
    try {
        fn();
    } catch (const gq::GraphError& e) {
        return e.kind();
    }
    FAIL("expected a GraphError");
    return gq::ErrorKind::SyntaxError;
}
