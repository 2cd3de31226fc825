#pragma once

// Exact integer polynomial arithmetic and coefficient-sequence property tests.

#include "unimodal/polycore/boros_moll.hpp"
#include "unimodal/polycore/gamma.hpp"
#include "unimodal/polycore/int_poly.hpp"
#include "unimodal/polycore/properties.hpp"
#include "unimodal/polycore/real_roots.hpp"
