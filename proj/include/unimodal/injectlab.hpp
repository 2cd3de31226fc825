#pragma once

// Partitions in a box, the candidate level-raising maps, and their audits.

#include "unimodal/injectlab/audit.hpp"
#include "unimodal/injectlab/box.hpp"
#include "unimodal/injectlab/rules.hpp"
