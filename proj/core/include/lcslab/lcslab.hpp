#pragma once

#include "lcslab/combinatorics.hpp"
#include "lcslab/diff_fsm.hpp"
#include "lcslab/dp.hpp"
#include "lcslab/estimator.hpp"
#include "lcslab/poset.hpp"
#include "lcslab/rng.hpp"
#include "lcslab/row_engine.hpp"
#include "lcslab/sequence.hpp"
#include "lcslab/trial_stats.hpp"
