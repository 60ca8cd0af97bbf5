// nakamura.hpp -- umbrella header

#pragma once

#include "nakamura/coalition.hpp"
#include "nakamura/game.hpp"
#include "nakamura/axioms.hpp"
#include "nakamura/nakamura.hpp"
#include "nakamura/aggregation.hpp"
#include "nakamura/appendix_a.hpp"
#include "nakamura/constructions.hpp"
#include "nakamura/effectivity.hpp"
#include "nakamura/evidence.hpp"
#include "nakamura/report.hpp"
