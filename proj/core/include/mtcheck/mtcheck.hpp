#pragma once

#include "mtcheck/analyzer.hpp"
#include "mtcheck/dot.hpp"
#include "mtcheck/error.hpp"
#include "mtcheck/explorer.hpp"
#include "mtcheck/interaction.hpp"
#include "mtcheck/sat_reduction.hpp"
#include "mtcheck/syntax.hpp"
#include "mtcheck/term.hpp"
#include "mtcheck/trace.hpp"
