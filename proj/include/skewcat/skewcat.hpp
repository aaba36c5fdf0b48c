#pragma once

#include "skewcat/bridge.hpp"
#include "skewcat/catcalc.hpp"
#include "skewcat/error.hpp"
#include "skewcat/focused.hpp"
#include "skewcat/formula.hpp"
#include "skewcat/rewrite.hpp"
#include "skewcat/seqcalc.hpp"
#include "skewcat/sexpr.hpp"
