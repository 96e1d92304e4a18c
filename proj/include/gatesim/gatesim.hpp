#pragma once

// Simulation laboratory for randomized rumor spreading on the complete
// graph: fully-random push, the quasi-random list protocol, and the gate
// model with reduced randomness, together with the adversarial list
// construction, closed-form bound evaluators, the marking experiment, the
// exact negative-correlation oracle, the pessimistic two-phase process,
// and a reproducible Monte Carlo harness.

#include "gatesim/bounds.hpp"
#include "gatesim/correlation.hpp"
#include "gatesim/errors.hpp"
#include "gatesim/export.hpp"
#include "gatesim/gates.hpp"
#include "gatesim/list_io.hpp"
#include "gatesim/lists.hpp"
#include "gatesim/marking.hpp"
#include "gatesim/protocol.hpp"
#include "gatesim/rng.hpp"
#include "gatesim/stats.hpp"
#include "gatesim/trials.hpp"
#include "gatesim/two_phase.hpp"
