#pragma once

// Gaussian polynomials by exact quotient, q-Pascal recurrence, box
// enumeration and the KOH sum.

#include "unimodal/qgauss/gaussian.hpp"
#include "unimodal/qgauss/koh.hpp"
