#pragma once

// Classical ranked posets: subsets, permutations, set partitions.

#include "unimodal/posetlab/permutations.hpp"
#include "unimodal/posetlab/ranked_poset.hpp"
#include "unimodal/posetlab/set_partitions.hpp"
#include "unimodal/posetlab/subset_lattice.hpp"
