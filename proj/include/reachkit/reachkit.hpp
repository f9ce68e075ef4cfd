#pragma once

#include "errors.hpp"
#include "state_set.hpp"
#include "nfa.hpp"
#include "digraph.hpp"
#include "analysis.hpp"
#include "oracles.hpp"
#include "gadgets.hpp"
#include "matrices.hpp"
#include "codes.hpp"
#include "random.hpp"
#include "io.hpp"
